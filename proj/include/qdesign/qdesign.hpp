#pragma once

#include "combinatorics.hpp"
#include "criteria.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "io.hpp"
#include "linear_code.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "profile.hpp"
#include "regularity.hpp"
#include "reproduce.hpp"
#include "trace.hpp"
#include "zoo.hpp"
