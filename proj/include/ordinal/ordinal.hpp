#pragma once

#include "analysis.hpp"
#include "encode.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "pattern.hpp"
#include "ranking.hpp"
#include "symmetry.hpp"
#include "window.hpp"
