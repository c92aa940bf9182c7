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

#include <mcsyn/abstract_xag.hpp>
#include <mcsyn/xag.hpp>

#include <random>

using namespace mcsyn;

namespace
{

xag ite_network_long()
{
  xag net( 3u );
  net.add_and( 1u, 2u ); /* x4 */
  net.add_and( 1u, 3u ); /* x5 */
  net.add_xor( 4u, 5u ); /* x6 */
  net.add_xor( 3u, 6u ); /* x7 */
  net.set_output( 7u );
  return net;
}

xag ite_network_short()
{
  xag net( 3u );
  net.add_xor( 2u, 3u ); /* x4 */
  net.add_and( 1u, 4u ); /* x5 */
  net.add_xor( 3u, 5u ); /* x6 */
  net.set_output( 6u );
  return net;
}

} // namespace

TEST_CASE( "network simulation" )
{
  CHECK( simulate( ite_network_long() ).to_hex() == "d8" );
  CHECK( simulate( ite_network_short() ).to_hex() == "d8" );
  CHECK( simulate( ite_network_long() ) == simulate( ite_network_short() ) );

  xag empty( 2u );
  empty.set_output( 0u );
  CHECK( simulate( empty ).is_constant_zero() );

  xag inverted( 2u );
  inverted.add_and( 1u, 2u );
  inverted.set_output( 3u, true );
  CHECK( simulate( inverted ).to_hex() == "7" );
}

TEST_CASE( "step validation" )
{
  xag net( 3u );
  CHECK_THROWS_AS( net.add_and( 2u, 2u ), std::invalid_argument );
  CHECK_THROWS_AS( net.add_and( 0u, 1u ), std::invalid_argument );
  CHECK_THROWS_AS( net.add_and( 2u, 4u ), std::invalid_argument );
  net.add_and( 1u, 2u );
  CHECK_THROWS_AS( net.set_output( 9u ), std::invalid_argument );
}

TEST_CASE( "abstract simulation" )
{
  abstract_xag net( 3u );
  net.add_step( index_set{ 1u }, index_set{ 2u, 3u } );
  net.set_output( index_set{ 3u, 4u } );
  CHECK( simulate( net ).to_hex() == "d8" );

  abstract_xag empty_out( 3u );
  empty_out.set_output( index_set{} );
  CHECK( simulate( empty_out ).is_constant_zero() );

  abstract_xag crossed( 3u );
  crossed.add_step( index_set{ 1u, 2u }, index_set{ 1u, 3u } );
  crossed.set_output( index_set{ 4u } );
  truth_table expected( 3u );
  for ( uint64_t x = 0u; x < 8u; ++x )
  {
    auto const b1 = ( x >> 0u ) & 1u, b2 = ( x >> 1u ) & 1u, b3 = ( x >> 2u ) & 1u;
    expected.set_bit( x, ( b1 ^ b2 ) & ( b1 ^ b3 ) );
  }
  CHECK( simulate( crossed ) == expected );
}

TEST_CASE( "sharing-free translation" )
{
  abstract_xag short_form( 3u );
  short_form.add_step( index_set{ 1u }, index_set{ 2u, 3u } );
  short_form.set_output( index_set{ 3u, 4u } );
  auto const net = to_xag( short_form );
  CHECK( net.num_ands() == 1u );
  CHECK( net.num_xors() == 2u );
  CHECK( simulate( net ) == simulate( ite_network_short() ) );

  abstract_xag single( 3u );
  single.add_step( index_set{ 1u }, index_set{ 2u } );
  single.set_output( index_set{ 4u } );
  auto const single_net = to_xag( single );
  CHECK( single_net.num_ands() == 1u );
  CHECK( single_net.num_xors() == 0u );

  abstract_xag chains( 5u );
  chains.add_step( index_set{ 1u, 2u }, index_set{ 3u, 4u, 5u } );
  chains.set_output( index_set{ 6u } );
  auto const chain_net = to_xag( chains );
  CHECK( chain_net.num_ands() == 1u );
  CHECK( chain_net.num_xors() == 3u );

  abstract_xag bad( 2u );
  bad.add_step( index_set{}, index_set{ 1u } );
  bad.set_output( index_set{ 3u } );
  CHECK_THROWS_AS( to_xag( bad ), std::invalid_argument );
}

TEST_CASE( "merging XOR gates into linear forms" )
{
  auto const a1 = to_abstract( ite_network_long() );
  CHECK( a1.num_steps() == 2u );
  CHECK( a1.steps()[0].fanin1 == index_set{ 1u } );
  CHECK( a1.steps()[0].fanin2 == index_set{ 2u } );
  CHECK( a1.steps()[1].fanin1 == index_set{ 1u } );
  CHECK( a1.steps()[1].fanin2 == index_set{ 3u } );
  CHECK( a1.output_set() == ( index_set{ 3u, 4u, 5u } ) );

  xag pure_xor( 3u );
  pure_xor.add_xor( 1u, 2u );
  pure_xor.add_xor( 3u, 4u );
  pure_xor.set_output( 5u );
  auto const linear = to_abstract( pure_xor );
  CHECK( linear.num_steps() == 0u );
  CHECK( linear.output_set() == ( index_set{ 1u, 2u, 3u } ) );

  auto const a2 = to_abstract( ite_network_short() );
  CHECK( a2.num_steps() == 1u );
  CHECK( a2.steps()[0].fanin1 == index_set{ 1u } );
  CHECK( a2.steps()[0].fanin2 == ( index_set{ 2u, 3u } ) );
  CHECK( a2.output_set() == ( index_set{ 3u, 4u } ) );
}

TEST_CASE( "translation cost" )
{
  auto const a2 = to_abstract( ite_network_short() );
  CHECK( xor_cost( a2 ) == 2u );
  auto const a1 = to_abstract( ite_network_long() );
  CHECK( xor_cost( a1 ) == 2u );

  abstract_xag singletons( 2u );
  singletons.add_step( index_set{ 1u }, index_set{ 2u } );
  singletons.set_output( index_set{ 3u } );
  CHECK( xor_cost( singletons ) == 0u );
}

TEST_CASE( "round trip through the concrete network" )
{
  std::mt19937_64 rng( 2026u );
  for ( auto iteration = 0u; iteration < 200u; ++iteration )
  {
    auto const n = 2u + rng() % 4u;
    auto const r = rng() % 5u;
    abstract_xag net( n );
    for ( uint32_t k = 0u; k < r; ++k )
    {
      auto const width = n + k;
      auto const nonempty = [&]() {
        uint64_t mask = 0u;
        while ( mask == 0u )
        {
          mask = rng() & ( ( uint64_t( 1 ) << width ) - 1u );
        }
        return index_set::from_mask( mask );
      };
      auto const s1 = nonempty();
      auto s2 = nonempty();
      while ( s1 == s2 && s1.size() == 1u )
      {
        s2 = nonempty(); /* equal singleton fan-ins have no 2-input AND form */
      }
      net.add_step( s1, s2 );
    }
    net.set_output( index_set::from_mask( rng() & ( ( uint64_t( 1 ) << ( n + r ) ) - 1u ) ) );
    auto const rebuilt = to_abstract( to_xag( net ) );
    /* equal up to the order within each commutative fan-in pair */
    REQUIRE( rebuilt.num_steps() == net.num_steps() );
    for ( uint32_t k = 0u; k < net.num_steps(); ++k )
    {
      auto const& a = net.steps()[k];
      auto const& b = rebuilt.steps()[k];
      auto const same = ( a.fanin1 == b.fanin1 && a.fanin2 == b.fanin2 ) ||
                        ( a.fanin1 == b.fanin2 && a.fanin2 == b.fanin1 );
      REQUIRE( same );
    }
    REQUIRE( rebuilt.output_set() == net.output_set() );
    CHECK( simulate( rebuilt ) == simulate( net ) );
    CHECK( to_xag( net ).num_ands() == net.num_steps() );
  }
}

TEST_CASE( "subset-free rewriting" )
{
  abstract_xag nested( 2u );
  nested.add_step( index_set{ 1u }, index_set{ 1u, 2u } );
  nested.set_output( index_set{ 3u } );
  auto const rewritten = subset_free_normalize( nested );
  CHECK( rewritten.steps()[0].fanin1 == index_set{ 1u } );
  CHECK( rewritten.steps()[0].fanin2 == index_set{ 2u } );
  CHECK( rewritten.output_set() == ( index_set{ 1u, 3u } ) );
  CHECK( simulate( rewritten ) == simulate( nested ) );
  CHECK( is_subset_free( rewritten ) );

  abstract_xag clean( 3u );
  clean.add_step( index_set{ 1u, 2u }, index_set{ 2u, 3u } );
  clean.set_output( index_set{ 4u } );
  CHECK( subset_free_normalize( clean ) == clean );

  abstract_xag equal_sets( 2u );
  equal_sets.add_step( index_set{ 1u, 2u }, index_set{ 1u, 2u } );
  equal_sets.set_output( index_set{ 3u } );
  auto const degenerate = subset_free_normalize( equal_sets );
  CHECK( degenerate.num_steps() == 1u );
  CHECK( simulate( degenerate ) == simulate( equal_sets ) );
}

TEST_CASE( "subset-free rewriting on all small networks" )
{
  /* n <= 2, r <= 2 here; the acceptance suite extends this to n <= 3 */
  for ( uint32_t n = 1u; n <= 2u; ++n )
  {
    for ( uint32_t r = 0u; r <= 2u; ++r )
    {
      std::vector<uint64_t> masks( 2u * r + 1u, 0u );
      auto const widths = [&]( uint32_t slot ) {
        return slot == 2u * r ? n + r : n + slot / 2u;
      };
      auto advance = [&]() {
        for ( size_t slot = 0u; slot < masks.size(); ++slot )
        {
          if ( ++masks[slot] < ( uint64_t( 1 ) << widths( static_cast<uint32_t>( slot ) ) ) )
          {
            return true;
          }
          masks[slot] = 0u;
        }
        return false;
      };
      do
      {
        abstract_xag net( n );
        for ( uint32_t k = 0u; k < r; ++k )
        {
          net.add_step( index_set::from_mask( masks[2u * k] ), index_set::from_mask( masks[2u * k + 1u] ) );
        }
        net.set_output( index_set::from_mask( masks[2u * r] ) );
        auto const rewritten = subset_free_normalize( net );
        REQUIRE( rewritten.num_steps() == net.num_steps() );
        REQUIRE( simulate( rewritten ) == simulate( net ) );
        REQUIRE( is_subset_free( rewritten ) );
      } while ( advance() );
    }
  }
}

TEST_CASE( "netlist format round trip" )
{
  auto const net = ite_network_long();
  auto const text = to_netlist( net );
  CHECK( text == "x4 = x1 & x2\nx5 = x1 & x3\nx6 = x4 ^ x5\nx7 = x3 ^ x6\nf = x7\n" );
  auto const parsed = parse_netlist( text, 3u );
  CHECK( simulate( parsed ) == simulate( net ) );

  xag constant( 2u );
  constant.set_output( 0u );
  CHECK( to_netlist( constant ) == "f = x0\n" );
  CHECK( simulate( parse_netlist( "f = x0\n", 2u ) ).is_constant_zero() );

  xag inverted( 2u );
  inverted.add_and( 1u, 2u );
  inverted.set_output( 3u, true );
  auto const inv_text = to_netlist( inverted );
  CHECK( inv_text.find( "f = !x3" ) != std::string::npos );
  CHECK( simulate( parse_netlist( inv_text, 2u ) ).to_hex() == "7" );

  CHECK_THROWS_AS( parse_netlist( "x4 = x1 & x2\n", 3u ), std::invalid_argument );
  CHECK_THROWS_AS( parse_netlist( "x5 = x1 & x2\nf = x5\n", 3u ), std::invalid_argument );
  CHECK_THROWS_AS( parse_netlist( "x4 = x1 % x2\nf = x4\n", 3u ), std::invalid_argument );
  CHECK_THROWS_AS( parse_netlist( "f = x4\nx5 = x1 & x2\n", 3u ), std::invalid_argument );
}

TEST_CASE( "dot export" )
{
  auto const dot = to_dot( ite_network_short() );
  CHECK( dot.find( "digraph" ) != std::string::npos );
  CHECK( dot.find( "x5" ) != std::string::npos );
  CHECK( dot.find( "-> f" ) != std::string::npos );
}
