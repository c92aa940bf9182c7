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

#include <mcsyn/sat/encodings.hpp>
#include <mcsyn/sat/session.hpp>

#include <sstream>

using namespace mcsyn::sat;

TEST_CASE( "variable allocation is dense and monotone" )
{
  solver_session s;
  CHECK( s.new_variable().var == 1u );
  CHECK( s.new_variable().var == 2u );
  std::vector<literal> vars;
  for ( auto i = 0u; i < 1000u; ++i )
  {
    vars.push_back( s.new_variable() );
  }
  for ( auto i = 0u; i < vars.size(); ++i )
  {
    CHECK( vars[i].var == 3u + i );
  }
}

TEST_CASE( "basic solving" )
{
  solver_session s;
  auto const x = s.new_variable();
  s.add_clause( { x } );
  auto outcome = s.solve();
  REQUIRE( outcome.status == solve_status::sat );
  CHECK( outcome.value( x ) );

  s.add_clause( { ~x } );
  CHECK( s.solve().status == solve_status::unsat );
}

TEST_CASE( "the empty clause makes the formula unsatisfiable" )
{
  solver_session s;
  s.new_variable();
  s.add_clause( std::vector<literal>{} );
  CHECK( s.solve().status == solve_status::unsat );
}

TEST_CASE( "assumptions do not persist" )
{
  solver_session s;
  auto const x = s.new_variable();
  auto const y = s.new_variable();
  s.add_clause( { x, y } );
  CHECK( s.solve( { ~x, ~y } ).status == solve_status::unsat );
  CHECK( s.solve().status == solve_status::sat );
  auto const forced = s.solve( { ~x } );
  REQUIRE( forced.status == solve_status::sat );
  CHECK( forced.value( y ) );
}

TEST_CASE( "incremental solving stays consistent with the cumulative formula" )
{
  solver_session s;
  s.enable_recording();
  std::vector<literal> vars;
  for ( auto i = 0u; i < 6u; ++i )
  {
    vars.push_back( s.new_variable() );
  }
  s.add_clause( { vars[0], vars[1] } );
  s.add_clause( { ~vars[0], vars[2] } );
  REQUIRE( s.solve().status == solve_status::sat );
  s.add_clause( { ~vars[2], vars[3] } );
  s.add_clause( { ~vars[1] } );
  auto const outcome = s.solve();
  REQUIRE( outcome.status == solve_status::sat );
  /* the model satisfies every recorded clause */
  std::ostringstream os;
  s.export_dimacs( os );
  CHECK( outcome.value( vars[0] ) );
  CHECK( outcome.value( vars[2] ) );
  CHECK( outcome.value( vars[3] ) );
}

namespace
{

/* pigeonhole: p+1 pigeons, p holes; small but takes many conflicts */
void encode_pigeonhole( solver_session& s, uint32_t holes, std::vector<std::vector<literal>>& at )
{
  at.assign( holes + 1u, {} );
  for ( auto p = 0u; p <= holes; ++p )
  {
    for ( auto h = 0u; h < holes; ++h )
    {
      at[p].push_back( s.new_variable() );
    }
    s.add_clause( at[p] );
  }
  for ( auto h = 0u; h < holes; ++h )
  {
    for ( auto p1 = 0u; p1 <= holes; ++p1 )
    {
      for ( auto p2 = p1 + 1u; p2 <= holes; ++p2 )
      {
        s.add_clause( { ~at[p1][h], ~at[p2][h] } );
      }
    }
  }
}

} // namespace

TEST_CASE( "conflict limits surface as a third outcome" )
{
  solver_session s;
  std::vector<std::vector<literal>> at;
  encode_pigeonhole( s, 7u, at );
  s.set_conflict_limit( 1u );
  CHECK( s.solve().status == solve_status::limit );
  s.set_conflict_limit( std::nullopt );
  CHECK( s.solve().status == solve_status::unsat );
}

TEST_CASE( "xor chains are equivalent to their inputs' parity" )
{
  for ( uint32_t width = 1u; width <= 4u; ++width )
  {
    solver_session s;
    std::vector<literal> inputs;
    for ( auto i = 0u; i < width; ++i )
    {
      inputs.push_back( s.new_variable() );
    }
    auto const chain = encode_xor_chain( s, inputs );
    if ( width == 1u )
    {
      CHECK( chain == inputs[0] );
    }
    for ( uint32_t assignment = 0u; assignment < ( 1u << width ); ++assignment )
    {
      std::vector<literal> assumptions;
      auto parity = false;
      for ( auto i = 0u; i < width; ++i )
      {
        auto const value = ( assignment >> i ) & 1u;
        parity ^= value != 0u;
        assumptions.push_back( value ? inputs[i] : ~inputs[i] );
      }
      auto forced = assumptions;
      forced.push_back( parity ? ~chain : chain );
      CHECK( s.solve( forced ).status == solve_status::unsat );
      forced.back() = parity ? chain : ~chain;
      CHECK( s.solve( forced ).status == solve_status::sat );
    }
  }
  solver_session s;
  CHECK_THROWS_AS( encode_xor_chain( s, {} ), std::invalid_argument );
}

TEST_CASE( "and and or gadgets" )
{
  solver_session s;
  auto const a = s.new_variable();
  auto const b = s.new_variable();
  auto const c = s.new_variable();
  auto const t = encode_and( s, a, b );
  auto const o = encode_or( s, { a, b, c } );
  for ( uint32_t assignment = 0u; assignment < 8u; ++assignment )
  {
    auto const av = ( assignment & 1u ) != 0u;
    auto const bv = ( assignment & 2u ) != 0u;
    auto const cv = ( assignment & 4u ) != 0u;
    std::vector<literal> assumptions{ av ? a : ~a, bv ? b : ~b, cv ? c : ~c };
    auto const outcome = s.solve( assumptions );
    REQUIRE( outcome.status == solve_status::sat );
    CHECK( outcome.value( t ) == ( av && bv ) );
    CHECK( outcome.value( o ) == ( av || bv || cv ) );
  }
}

TEST_CASE( "lexicographic ordering over indicator vectors" )
{
  constexpr uint32_t width = 3u;
  solver_session s;
  std::vector<literal> a, b;
  for ( auto i = 0u; i < width; ++i )
  {
    a.push_back( s.new_variable() );
  }
  for ( auto i = 0u; i < width; ++i )
  {
    b.push_back( s.new_variable() );
  }
  encode_lex_smaller( s, a, b );
  for ( uint32_t av = 0u; av < ( 1u << width ); ++av )
  {
    for ( uint32_t bv = 0u; bv < ( 1u << width ); ++bv )
    {
      std::vector<literal> assumptions;
      for ( auto i = 0u; i < width; ++i )
      {
        assumptions.push_back( ( av >> i ) & 1u ? a[i] : ~a[i] );
        assumptions.push_back( ( bv >> i ) & 1u ? b[i] : ~b[i] );
      }
      /* allowed iff the sets are equal or the largest differing index is in b */
      auto const diff = av ^ bv;
      auto const allowed = diff == 0u || ( ( bv >> ( 31u - __builtin_clz( diff ) ) ) & 1u ) != 0u;
      CHECK( s.solve( assumptions ).status == ( allowed ? solve_status::sat : solve_status::unsat ) );
    }
  }
  solver_session s2;
  auto const x = s2.new_variable();
  CHECK_THROWS_AS( encode_lex_smaller( s2, { x }, {} ), std::invalid_argument );
}

TEST_CASE( "sorter outputs count true inputs" )
{
  for ( uint32_t width = 1u; width <= 5u; ++width )
  {
    solver_session s;
    std::vector<literal> inputs;
    for ( auto i = 0u; i < width; ++i )
    {
      inputs.push_back( s.new_variable() );
    }
    auto const outputs = encode_sorter( s, inputs );
    REQUIRE( outputs.size() == width );
    for ( uint32_t assignment = 0u; assignment < ( 1u << width ); ++assignment )
    {
      std::vector<literal> assumptions;
      for ( auto i = 0u; i < width; ++i )
      {
        assumptions.push_back( ( assignment >> i ) & 1u ? inputs[i] : ~inputs[i] );
      }
      auto const outcome = s.solve( assumptions );
      REQUIRE( outcome.status == solve_status::sat );
      auto const count = static_cast<uint32_t>( __builtin_popcount( assignment ) );
      for ( auto k = 0u; k < width; ++k )
      {
        CHECK( outcome.value( outputs[k] ) == ( count >= k + 1u ) );
      }
    }
  }
}

TEST_CASE( "cardinality bound on sorter outputs" )
{
  {
    solver_session s;
    std::vector<literal> inputs{ s.new_variable(), s.new_variable(), s.new_variable() };
    auto const outputs = encode_sorter( s, inputs );
    constrain_at_most( s, outputs, 2u );
    CHECK( s.solve( { inputs[0], inputs[1] } ).status == solve_status::unsat );
    CHECK( s.solve( { inputs[0], ~inputs[1], ~inputs[2] } ).status == solve_status::sat );
  }
  {
    solver_session s;
    std::vector<literal> inputs{ s.new_variable(), s.new_variable(), s.new_variable() };
    auto const outputs = encode_sorter( s, inputs );
    constrain_at_most( s, outputs, 3u );
    CHECK( s.solve( { inputs[0], inputs[1], ~inputs[2] } ).status == solve_status::sat );
    CHECK( s.solve( { inputs[0], inputs[1], inputs[2] } ).status == solve_status::unsat );
  }
  {
    solver_session s;
    std::vector<literal> inputs{ s.new_variable(), s.new_variable(), s.new_variable(), s.new_variable() };
    auto const outputs = encode_sorter( s, inputs );
    constrain_at_most( s, outputs, 1u );
    CHECK( s.solve( { ~inputs[0], ~inputs[1], ~inputs[2], ~inputs[3] } ).status == solve_status::sat );
    CHECK( s.solve( { inputs[0] } ).status == solve_status::unsat );
    CHECK_THROWS_AS( constrain_at_most( s, outputs, 5u ), std::invalid_argument );
  }
}

TEST_CASE( "identical call sequences give identical formulas" )
{
  auto const build = []() {
    solver_session s;
    s.enable_recording();
    std::vector<literal> inputs;
    for ( auto i = 0u; i < 5u; ++i )
    {
      inputs.push_back( s.new_variable() );
    }
    encode_xor_chain( s, inputs );
    encode_sorter( s, inputs );
    encode_lex_smaller( s, { inputs[0], inputs[1] }, { inputs[2], inputs[3] } );
    std::ostringstream os;
    s.export_dimacs( os );
    return os.str();
  };
  auto const first = build();
  CHECK( first == build() );
  CHECK( first.rfind( "p cnf ", 0u ) == 0u );
}
