#pragma once

#include "sp4bg/error.hpp"
#include "sp4bg/ring.hpp"
#include "sp4bg/pseudo_good.hpp"
#include "sp4bg/ideal.hpp"
#include "sp4bg/sp4.hpp"
#include "sp4bg/weyl.hpp"
#include "sp4bg/bruhat.hpp"
#include "sp4bg/unipotent.hpp"
#include "sp4bg/congruence.hpp"
#include "sp4bg/finite.hpp"
#include "sp4bg/normalgen.hpp"
#include "sp4bg/random.hpp"
#include "sp4bg/serialize.hpp"
#include "sp4bg/checks.hpp"
#include "sp4bg/manifest.hpp"

namespace sp4bg {

inline constexpr const char* version = "0.1.0";

}  // namespace sp4bg
