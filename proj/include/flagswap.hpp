#ifndef FLAGSWAP_HPP
#define FLAGSWAP_HPP

#include <flagswap/error.hpp>
#include <flagswap/rational.hpp>
#include <flagswap/rat_matrix.hpp>
#include <flagswap/flag.hpp>
#include <flagswap/f2tri.hpp>
#include <flagswap/factorization.hpp>
#include <flagswap/orbit_engine.hpp>
#include <flagswap/named_matrices.hpp>
#include <flagswap/analysis.hpp>
#include <flagswap/matrix_io.hpp>

#endif // FLAGSWAP_HPP
