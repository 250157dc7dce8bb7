#pragma once

#include "affhecke/kmodule.hpp"

namespace fixture {

/// The Demazure basis rule with its two branches swapped: a class moves down
/// along s_i when s_i is a descent and stays put otherwise.
inline affhecke::AffineWeylElement flipped_demazure_rule(const affhecke::AffineWeylElement& w, int i) {
    return affhecke::is_right_descent(w, i) ? w.times_generator(i) : w;
}

}  // namespace fixture
