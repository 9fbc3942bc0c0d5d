#pragma once

#include "torsuper/errors.hpp"
#include "torsuper/laurent.hpp"
#include "torsuper/poly.hpp"
#include "torsuper/format.hpp"
#include "torsuper/dyck.hpp"
#include "torsuper/superpoly.hpp"
#include "torsuper/oracle.hpp"
#include "torsuper/records.hpp"
#include "torsuper/verify.hpp"
