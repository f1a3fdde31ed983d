#pragma once

#include "ckfree/bounds.hpp"
#include "ckfree/certify.hpp"
#include "ckfree/construction.hpp"
#include "ckfree/csv.hpp"
#include "ckfree/dot.hpp"
#include "ckfree/errors.hpp"
#include "ckfree/graph.hpp"
#include "ckfree/graph6.hpp"
#include "ckfree/planar.hpp"
#include "ckfree/planar_code.hpp"
#include "ckfree/search.hpp"
