#pragma once

#include <biderlab/rational.hpp>
#include <biderlab/linalg.hpp>
#include <biderlab/verdict.hpp>
#include <biderlab/algebra.hpp>
#include <biderlab/polynomial.hpp>
#include <biderlab/bilinear.hpp>
#include <biderlab/identities.hpp>
#include <biderlab/decomposition.hpp>
#include <biderlab/presets.hpp>
