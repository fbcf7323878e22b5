#pragma once

#include "thetalat/matrix.hpp"

namespace thetalat {

// u * m * v = s with s diagonal, s(i,i) | s(i+1,i+1), u and v unimodular
struct SnfResult {
    IntMat u, s, v;
};

SnfResult snf(const IntMat& m);

// columns of b must be Q-independent; returns columns spanning span_Q(b) ∩ Z^n
IntMat saturate(const IntMat& b);

// pfaffian of an alternating integer matrix of even order, first-row expansion sign
Int pfaffian(const IntMat& e);

}  // namespace thetalat
