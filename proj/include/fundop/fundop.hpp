#pragma once

#include "fundop/complexmat.hpp"
#include "fundop/contraction.hpp"
#include "fundop/errors.hpp"
#include "fundop/gamma.hpp"
#include "fundop/hardy.hpp"
#include "fundop/io.hpp"
#include "fundop/report.hpp"
#include "fundop/rng.hpp"
#include "fundop/synthesis.hpp"
#include "fundop/tetrablock.hpp"
#include "fundop/verify.hpp"
