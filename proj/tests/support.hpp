#pragma once

#include <gtest/gtest.h>

#include "sp4bg/sp4bg.hpp"

namespace sp4bg::testing {

inline RingId Z() { return RingId::integers(); }
inline RingId O(long D) { return RingId::quadratic(D); }
inline RingElem I(const RingId& R, long n) { return RingElem::from_int(R, n); }
inline RingElem Q(const RingId& R, long a, long b) { return RingElem::quadratic(R, a, b); }

/// The catalog rings the property tests sweep.
inline std::vector<RingId> catalog() {
  return {RingId::integers(), RingId::localized(5), RingId::quadratic(5), RingId::quadratic(-3),
          RingId::quadratic(13), RingId::cubic(3), RingId::prime_field(2), RingId::prime_field(3),
          RingId::gf4(), RingId::gf8()};
}

template <class F>
errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sp4bg::Error";
  return errc::invalid_argument;
}

}  // namespace sp4bg::testing

#define EXPECT_ERRC(code, expr) EXPECT_EQ(::sp4bg::testing::error_of([&] { (void)(expr); }), (code))
