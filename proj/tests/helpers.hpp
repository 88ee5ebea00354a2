#pragma once

#include <doctest.h>

#include "angspace/errors.hpp"
#include "angspace/vec2.hpp"
#include "oracles.hpp"

inline angspace::Vec2 V(oracle::P p) { return {p[0], p[1]}; }
inline oracle::P O(const angspace::Vec2& v) { return {v.x1, v.x2}; }

#define CHECK_CODE(expr, expected)                                   \
    do {                                                             \
        bool thrown_ = false;                                        \
        try {                                                        \
            (void)(expr);                                            \
        } catch (const angspace::Error& e_) {                        \
            thrown_ = true;                                          \
            CHECK_MESSAGE(e_.code() == (expected), e_.what());       \
        }                                                            \
        CHECK_MESSAGE(thrown_, "expected an angspace::Error");       \
    } while (0)
