// Everything at once.
#pragma once

#include "ggt/classify.hpp"
#include "ggt/complex.hpp"
#include "ggt/cubes.hpp"
#include "ggt/error.hpp"
#include "ggt/fixtures.hpp"
#include "ggt/group_action.hpp"
#include "ggt/homology.hpp"
#include "ggt/io.hpp"
#include "ggt/ktheory.hpp"
#include "ggt/linear_algebra.hpp"
#include "ggt/matrix_group.hpp"
#include "ggt/periodic.hpp"
#include "ggt/perm_group.hpp"
#include "ggt/raag.hpp"
#include "ggt/report.hpp"
