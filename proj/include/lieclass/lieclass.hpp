#pragma once

#include "lieclass/algebra_file.hpp"
#include "lieclass/alternating_form.hpp"
#include "lieclass/catalog.hpp"
#include "lieclass/ce_cohomology.hpp"
#include "lieclass/chart.hpp"
#include "lieclass/error.hpp"
#include "lieclass/exact_matrix.hpp"
#include "lieclass/jet_algebroid.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/local_group.hpp"
#include "lieclass/rational.hpp"
#include "lieclass/report.hpp"
#include "lieclass/splitting.hpp"
#include "lieclass/trace_forms.hpp"
#include "lieclass/verify.hpp"
