#pragma once

#include <doctest.h>

#include "fif/error.hpp"

#define CHECK_ERRC(expr, errc)                                 \
  do {                                                         \
    bool caught_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const fif::Error& e_) {                           \
      caught_ = true;                                          \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());           \
    }                                                          \
    CHECK_MESSAGE(caught_, "expected " #errc);                 \
  } while (0)
