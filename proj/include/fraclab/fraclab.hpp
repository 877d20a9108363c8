#pragma once

#include "fraclab/analysis.hpp"
#include "fraclab/error.hpp"
#include "fraclab/fbm.hpp"
#include "fraclab/fraccalc.hpp"
#include "fraclab/io.hpp"
#include "fraclab/mcsolve.hpp"
#include "fraclab/models.hpp"
#include "fraclab/params.hpp"
#include "fraclab/random.hpp"
#include "fraclab/sampled_path.hpp"
#include "fraclab/specfn.hpp"
