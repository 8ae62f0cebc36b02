#pragma once

#include "dlchi/assignment.hpp"
#include "dlchi/bigint.hpp"
#include "dlchi/character_table.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/flag.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/gf_matrix.hpp"
#include "dlchi/green.hpp"
#include "dlchi/group_element.hpp"
#include "dlchi/hecke.hpp"
#include "dlchi/induced.hpp"
#include "dlchi/interpolate.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/permutation.hpp"
#include "dlchi/pipeline.hpp"
#include "dlchi/point_count.hpp"
#include "dlchi/polynomial.hpp"
#include "dlchi/symfunc.hpp"
#include "dlchi/tableau.hpp"
#include "dlchi/verify.hpp"
#include "dlchi/version.hpp"
