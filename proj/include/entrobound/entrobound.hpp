#ifndef ENTROBOUND_ENTROBOUND_HPP
#define ENTROBOUND_ENTROBOUND_HPP

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/errors.hpp"
#include "entrobound/geometry.hpp"
#include "entrobound/oracle.hpp"
#include "entrobound/solver.hpp"
#include "entrobound/verify.hpp"

#endif
