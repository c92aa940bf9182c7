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
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file xag.hpp
  \brief XOR-AND graphs as step sequences, with simulation and text formats
*/

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace mcsyn
{

enum class gate_kind : uint8_t
{
  and_gate,
  xor_gate
};

struct xag_step
{
  gate_kind kind;
  uint32_t fanin1; /* 1 <= fanin1 < fanin2 < step index */
  uint32_t fanin2;
};

/*! \brief A single-output XOR-AND graph.
 *
 * Nodes are numbered 1..n for the inputs and n+1.. for the steps in
 * definition order.  Output index 0 denotes the constant-0 function; the
 * output may carry an inversion flag to represent non-normal functions.
 */
class xag
{
public:
  explicit xag( uint32_t num_inputs )
      : num_inputs_( num_inputs )
  {
    if ( num_inputs < 1u )
    {
      throw std::invalid_argument( "xag: at least one input required" );
    }
  }

  uint32_t num_inputs() const { return num_inputs_; }
  uint32_t num_steps() const { return static_cast<uint32_t>( steps_.size() ); }
  uint32_t num_nodes() const { return num_inputs_ + num_steps(); }

  std::vector<xag_step> const& steps() const { return steps_; }

  uint32_t add_step( gate_kind kind, uint32_t fanin1, uint32_t fanin2 )
  {
    auto const index = num_nodes() + 1u;
    if ( fanin1 < 1u || fanin1 >= fanin2 || fanin2 >= index )
    {
      throw std::invalid_argument( "xag: step fan-ins must satisfy 1 <= j1 < j2 < i" );
    }
    steps_.push_back( { kind, fanin1, fanin2 } );
    return index;
  }

  uint32_t add_and( uint32_t fanin1, uint32_t fanin2 ) { return add_step( gate_kind::and_gate, fanin1, fanin2 ); }
  uint32_t add_xor( uint32_t fanin1, uint32_t fanin2 ) { return add_step( gate_kind::xor_gate, fanin1, fanin2 ); }

  void set_output( uint32_t index, bool inverted = false )
  {
    if ( index > num_nodes() )
    {
      throw std::invalid_argument( "xag: output index exceeds node count" );
    }
    output_ = index;
    output_inverted_ = inverted;
  }

  uint32_t output() const { return output_; }
  bool output_inverted() const { return output_inverted_; }

  uint32_t num_ands() const
  {
    uint32_t cnt = 0u;
    for ( auto const& s : steps_ )
    {
      cnt += s.kind == gate_kind::and_gate ? 1u : 0u;
    }
    return cnt;
  }

  uint32_t num_xors() const { return num_steps() - num_ands(); }

private:
  uint32_t num_inputs_;
  std::vector<xag_step> steps_;
  uint32_t output_ = 0u;
  bool output_inverted_ = false;
};

/*! \brief Truth table computed at the network output, inversion applied. */
inline truth_table simulate( xag const& net )
{
  std::vector<truth_table> values;
  values.reserve( net.num_nodes() + 1u );
  values.emplace_back( truth_table( net.num_inputs() ) ); /* node 0 = constant 0 */
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    values.push_back( truth_table::nth_var( i, net.num_inputs() ) );
  }
  for ( auto const& s : net.steps() )
  {
    values.push_back( s.kind == gate_kind::and_gate ? ( values[s.fanin1] & values[s.fanin2] )
                                                    : ( values[s.fanin1] ^ values[s.fanin2] ) );
  }
  auto f = values[net.output()];
  return net.output_inverted() ? ~f : f;
}

/*! \brief ASCII netlist, one step per line, e.g. `x6 = x1 & x2`, final `f = x6`. */
inline std::string to_netlist( xag const& net )
{
  std::ostringstream os;
  auto index = net.num_inputs() + 1u;
  for ( auto const& s : net.steps() )
  {
    os << 'x' << index++ << " = x" << s.fanin1 << ( s.kind == gate_kind::and_gate ? " & x" : " ^ x" ) << s.fanin2 << '\n';
  }
  os << "f = " << ( net.output_inverted() ? "!" : "" ) << 'x' << net.output() << '\n';
  return os.str();
}

namespace detail
{

inline uint32_t parse_node_ref( std::string const& tok )
{
  if ( tok.size() < 2u || tok[0] != 'x' )
  {
    throw std::invalid_argument( "netlist: expected node reference, got '" + tok + "'" );
  }
  for ( auto i = 1u; i < tok.size(); ++i )
  {
    if ( tok[i] < '0' || tok[i] > '9' )
    {
      throw std::invalid_argument( "netlist: malformed node reference '" + tok + "'" );
    }
  }
  return static_cast<uint32_t>( std::stoul( tok.substr( 1u ) ) );
}

} // namespace detail

/*! \brief Parses the netlist format produced by `to_netlist`.
 *
 * The input count cannot be inferred from the text and must be supplied.
 */
inline xag parse_netlist( std::string const& text, uint32_t num_inputs )
{
  xag net( num_inputs );
  std::istringstream is( text );
  std::string line;
  auto output_seen = false;
  while ( std::getline( is, line ) )
  {
    std::istringstream ls( line );
    std::string lhs, eq, op1, op, op2;
    if ( !( ls >> lhs ) )
    {
      continue; /* blank line */
    }
    if ( output_seen )
    {
      throw std::invalid_argument( "netlist: content after output line" );
    }
    if ( lhs == "f" )
    {
      if ( !( ls >> eq >> op1 ) || eq != "=" )
      {
        throw std::invalid_argument( "netlist: malformed output line" );
      }
      auto inverted = false;
      if ( op1.size() > 1u && op1[0] == '!' )
      {
        inverted = true;
        op1 = op1.substr( 1u );
      }
      net.set_output( detail::parse_node_ref( op1 ), inverted );
      output_seen = true;
      continue;
    }
    if ( !( ls >> eq >> op1 >> op >> op2 ) || eq != "=" || ( op != "&" && op != "^" ) )
    {
      throw std::invalid_argument( "netlist: malformed step line '" + line + "'" );
    }
    auto const lhs_index = detail::parse_node_ref( lhs );
    if ( lhs_index != net.num_nodes() + 1u )
    {
      throw std::invalid_argument( "netlist: steps must be numbered consecutively from n+1" );
    }
    auto a = detail::parse_node_ref( op1 );
    auto b = detail::parse_node_ref( op2 );
    if ( a > b )
    {
      std::swap( a, b );
    }
    net.add_step( op == "&" ? gate_kind::and_gate : gate_kind::xor_gate, a, b );
  }
  if ( !output_seen )
  {
    throw std::invalid_argument( "netlist: missing output line" );
  }
  return net;
}

/*! \brief Graphviz dot rendering of the network DAG. */
inline std::string to_dot( xag const& net )
{
  std::ostringstream os;
  os << "digraph xag {\n  rankdir=BT;\n";
  for ( uint32_t i = 1u; i <= net.num_inputs(); ++i )
  {
    os << "  x" << i << " [shape=box];\n";
  }
  auto index = net.num_inputs() + 1u;
  for ( auto const& s : net.steps() )
  {
    os << "  x" << index << " [label=\"" << ( s.kind == gate_kind::and_gate ? "AND" : "XOR" ) << " x" << index << "\"];\n";
    os << "  x" << s.fanin1 << " -> x" << index << ";\n";
    os << "  x" << s.fanin2 << " -> x" << index << ";\n";
    ++index;
  }
  if ( net.output() > 0u )
  {
    os << "  f [shape=plaintext];\n  x" << net.output() << " -> f" << ( net.output_inverted() ? " [style=dashed]" : "" ) << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace mcsyn
