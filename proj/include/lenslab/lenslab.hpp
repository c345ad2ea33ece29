#pragma once

#include "lenslab/alexander.hpp"
#include "lenslab/certificate.hpp"
#include "lenslab/complex.hpp"
#include "lenslab/cone.hpp"
#include "lenslab/continued_fraction.hpp"
#include "lenslab/errors.hpp"
#include "lenslab/f2matrix.hpp"
#include "lenslab/graphs.hpp"
#include "lenslab/int_matrix.hpp"
#include "lenslab/lens.hpp"
#include "lenslab/lspace.hpp"
#include "lenslab/octet.hpp"
#include "lenslab/plumbing.hpp"
#include "lenslab/rational.hpp"
#include "lenslab/series.hpp"
