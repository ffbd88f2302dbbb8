// Umbrella header.

#ifndef SEMICONV_SEMICONV_HPP_
#define SEMICONV_SEMICONV_HPP_

#include "semiconv/dist.hpp"
#include "semiconv/dynamics.hpp"
#include "semiconv/error.hpp"
#include "semiconv/generators.hpp"
#include "semiconv/group.hpp"
#include "semiconv/ideals.hpp"
#include "semiconv/io.hpp"
#include "semiconv/linalg.hpp"
#include "semiconv/measure.hpp"
#include "semiconv/rational.hpp"
#include "semiconv/rees.hpp"
#include "semiconv/semigroup.hpp"
#include "semiconv/verify.hpp"

#endif  // SEMICONV_SEMICONV_HPP_
