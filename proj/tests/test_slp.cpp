/* mcsyn: SAT-based multiplicative complexity synthesis
 * Copyright (C) 2025-2026  the mcsyn authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE. */

#include <catch2/catch_amalgamated.hpp>

#include <mcsyn/linear_program.hpp>
#include <mcsyn/synthesis.hpp>

#include <random>
#include <sstream>

#include "support/slp_oracle.hpp"

using namespace mcsyn;

TEST_CASE( "a single linear form needs popcount minus one steps" )
{
  for ( uint32_t k = 2u; k <= 5u; ++k )
  {
    linear_matrix matrix{ 5u, { ( uint64_t( 1 ) << k ) - 1u } };
    CHECK( slp_decide( matrix, k - 1u ).status == slp_status::sat );
    CHECK( slp_decide( matrix, k - 2u ).status == slp_status::unsat );
    auto const res = slp_minimize( matrix );
    CHECK( res.net.num_steps() == k - 1u );
    CHECK( res.optimal );
    CHECK( linear_network_computes( res.net, matrix ) );
  }
}

TEST_CASE( "shared steps across rows" )
{
  linear_matrix matrix{ 3u, { 0b011u, 0b111u } };
  auto const res = slp_minimize( matrix );
  CHECK( res.net.num_steps() == 2u );
  CHECK( linear_network_computes( res.net, matrix ) );
}

TEST_CASE( "projection and constant rows resolve without steps" )
{
  linear_matrix matrix{ 2u, { 0b01u, 0b10u, 0u } };
  auto const res = slp_minimize( matrix );
  CHECK( res.net.num_steps() == 0u );
  CHECK( res.net.outputs == std::vector<uint32_t>{ 1u, 2u, 0u } );
  CHECK( linear_network_computes( res.net, matrix ) );
}

TEST_CASE( "decoded models compute their assigned rows" )
{
  std::mt19937_64 rng( 11u );
  for ( auto iteration = 0u; iteration < 30u; ++iteration )
  {
    linear_matrix matrix;
    matrix.cols = 3u + rng() % 2u;
    auto const rows = 1u + rng() % 3u;
    for ( auto l = 0u; l < rows; ++l )
    {
      matrix.rows.push_back( 1u + rng() % ( ( uint64_t( 1 ) << matrix.cols ) - 1u ) );
    }
    auto const res = slp_minimize( matrix );
    REQUIRE( res.optimal );
    REQUIRE( linear_network_computes( res.net, matrix ) );
  }
}

TEST_CASE( "minimization matches the brute-force oracle" )
{
  std::mt19937_64 rng( 17u );
  auto tested = 0u;
  while ( tested < 40u )
  {
    linear_matrix matrix;
    matrix.cols = 2u + rng() % 3u;
    auto const rows = 1u + rng() % 3u;
    for ( auto l = 0u; l < rows; ++l )
    {
      matrix.rows.push_back( rng() & ( ( uint64_t( 1 ) << matrix.cols ) - 1u ) );
    }
    auto const oracle = mcsyn_test::slp_brute_force_min( matrix.cols, matrix.rows, 4u );
    if ( !oracle )
    {
      continue;
    }
    auto const res = slp_minimize( matrix );
    REQUIRE( res.optimal );
    CHECK( res.net.num_steps() == *oracle );
    CHECK( linear_network_computes( res.net, matrix ) );
    ++tested;
  }
}

TEST_CASE( "cancellation-free networks never beat unrestricted ones" )
{
  linear_matrix matrix{ 3u, { 0b011u, 0b110u, 0b101u } };
  auto const unrestricted = slp_minimize( matrix );
  slp_options cf;
  cf.cancellation_free = true;
  auto const restricted = slp_minimize( matrix, cf );
  CHECK( restricted.net.num_steps() >= unrestricted.net.num_steps() );
  CHECK( linear_network_computes( restricted.net, matrix ) );

  /* cancellation-free: every node's cone variables survive into its form */
  auto const forms = linear_network_forms( restricted.net );
  std::vector<uint64_t> cones( restricted.net.num_inputs + restricted.net.num_steps() + 1u, 0u );
  for ( uint32_t j = 1u; j <= restricted.net.num_inputs; ++j )
  {
    cones[j] = uint64_t( 1 ) << ( j - 1u );
  }
  for ( size_t t = 0u; t < restricted.net.steps.size(); ++t )
  {
    auto const [a, b] = restricted.net.steps[t];
    cones[restricted.net.num_inputs + t + 1u] = cones[a] | cones[b];
    CHECK( cones[restricted.net.num_inputs + t + 1u] == forms[restricted.net.num_inputs + t + 1u] );
  }

  /* a single row behaves identically in both modes */
  linear_matrix single{ 4u, { 0b1111u } };
  CHECK( slp_minimize( single ).net.num_steps() == slp_minimize( single, cf ).net.num_steps() );
}

TEST_CASE( "conflict limits fall back to plain chains" )
{
  linear_matrix matrix{ 4u, { 0b0111u, 0b1110u, 0b1011u, 0b1101u } };
  slp_options limited;
  limited.conflict_limit = 1u;
  auto const res = slp_minimize( matrix, limited );
  CHECK( !res.optimal );
  CHECK( linear_network_computes( res.net, matrix ) );
  CHECK( res.net.num_steps() == 8u ); /* two chain steps per row */
}

TEST_CASE( "matrix text format" )
{
  std::istringstream is( "2 4\n0110\n1110\n" );
  auto const matrix = parse_matrix( is );
  CHECK( matrix.num_rows() == 2u );
  CHECK( matrix.cols == 4u );
  CHECK( matrix.rows[0] == 0b0110u );
  CHECK( matrix.rows[1] == 0b0111u ); /* leftmost character is column 1 */
  std::ostringstream os;
  write_matrix( os, matrix );
  std::istringstream round( os.str() );
  auto const again = parse_matrix( round );
  CHECK( again.rows == matrix.rows );

  std::istringstream bad1( "1 3\n01\n" );
  CHECK_THROWS_AS( parse_matrix( bad1 ), std::invalid_argument );
  std::istringstream bad2( "1 3\n012\n" );
  CHECK_THROWS_AS( parse_matrix( bad2 ), std::invalid_argument );
  std::istringstream bad3( "x" );
  CHECK_THROWS_AS( parse_matrix( bad3 ), std::invalid_argument );
}

TEST_CASE( "the extracted matrix lists fan-in forms then the output form" )
{
  abstract_xag short_form( 3u );
  short_form.add_step( index_set{ 1u }, index_set{ 2u, 3u } );
  short_form.set_output( index_set{ 3u, 4u } );
  auto const matrix = extract_matrix( short_form );
  REQUIRE( matrix.num_rows() == 3u );
  CHECK( matrix.cols == 4u );
  CHECK( matrix.rows[0] == 0b0001u );
  CHECK( matrix.rows[1] == 0b0110u );
  CHECK( matrix.rows[2] == 0b1100u );

  abstract_xag linear( 3u );
  linear.set_output( index_set{ 1u, 3u } );
  auto const single = extract_matrix( linear );
  REQUIRE( single.num_rows() == 1u );
  CHECK( single.rows[0] == 0b101u );
}

TEST_CASE( "rebuilding interleaves gates and xor steps" )
{
  abstract_xag short_form( 3u );
  short_form.add_step( index_set{ 1u }, index_set{ 2u, 3u } );
  short_form.set_output( index_set{ 3u, 4u } );
  auto const matrix = extract_matrix( short_form );
  slp_options opts;
  opts.ordering = true;
  opts.num_primary = 3u;
  auto const lp = slp_minimize( matrix, opts );
  auto const net = rebuild_xag( short_form, lp.net );
  CHECK( net.num_ands() == 1u );
  CHECK( net.num_xors() == 2u );
  CHECK( simulate( net ) == simulate( short_form ) );

  /* a function that is a pure linear form rebuilds into an XOR chain */
  abstract_xag linear( 4u );
  linear.set_output( index_set{ 1u, 2u, 4u } );
  auto const lmatrix = extract_matrix( linear );
  auto const llp = slp_minimize( lmatrix );
  auto const lnet = rebuild_xag( linear, llp.net );
  CHECK( lnet.num_ands() == 0u );
  CHECK( lnet.num_xors() == 2u );
  CHECK( simulate( lnet ) == simulate( linear ) );
}

TEST_CASE( "support minimization finds the cheapest abstract structure" )
{
  auto const ite = truth_table::from_hex( "d8", 3u );
  auto const res = heuristic_min_support( ite, 1u );
  CHECK( res.support == 5u );
  CHECK( res.support_optimal );
  CHECK( res.net.num_steps() == 1u );
  CHECK( simulate( res.net ) == ite );

  auto const and2 = truth_table::from_hex( "8", 2u );
  auto const res2 = heuristic_min_support( and2, 1u );
  CHECK( res2.support == 3u );

  /* the reference network for 80008000 has seven singleton sets */
  auto const tree = truth_table::from_hex( "80008000", 5u );
  auto const res3 = heuristic_min_support( tree, 3u );
  CHECK( res3.support <= 7u );
  CHECK( simulate( res3.net ) == tree );

  CHECK_THROWS_AS( heuristic_min_support( truth_table::from_hex( "80", 3u ), 1u ), std::invalid_argument );
}
