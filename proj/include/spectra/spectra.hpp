#pragma once

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"
#include "spectra/linalg.hpp"
#include "spectra/unipoly.hpp"
#include "spectra/polytope.hpp"
#include "spectra/fan.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/resolution2d.hpp"
#include "spectra/report.hpp"
