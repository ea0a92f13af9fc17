#ifndef KCLASS_KCLASS_HPP
#define KCLASS_KCLASS_HPP

#include "polynomial.hpp"
#include "parser.hpp"
#include "determinant.hpp"
#include "divided_difference.hpp"
#include "weyl.hpp"
#include "clan.hpp"
#include "pair.hpp"
#include "orbits.hpp"
#include "classes.hpp"
#include "count.hpp"

#endif
