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
  \file class_table.hpp
  \brief Reference networks for the 48 affine classes of 5-variable functions

  The table is embedded at build time from `data/table2.txt` and shared
  by the verification command and the test suites.  Each entry carries
  the class id, the representative's truth table, its multiplicative
  complexity, and a reference network in the netlist text format.
*/

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "truth_table.hpp"
#include "xag.hpp"

#include <mcsyn/detail/table2_data.hpp>

namespace mcsyn
{

struct class_table_entry
{
  uint32_t id;
  std::string hex;
  uint32_t mc;
  std::string netlist;
  xag network{ 5u };

  truth_table function() const { return truth_table::from_hex( hex, 5u ); }
};

namespace detail
{

inline std::vector<class_table_entry> parse_class_table( std::string const& raw )
{
  std::vector<class_table_entry> entries;
  std::istringstream is( raw );
  std::string line;
  class_table_entry current;
  std::string netlist;
  auto in_entry = false;
  while ( std::getline( is, line ) )
  {
    if ( line.empty() )
    {
      continue;
    }
    if ( line.rfind( "entry ", 0u ) == 0u )
    {
      if ( in_entry )
      {
        throw std::invalid_argument( "class table: entry without output line" );
      }
      std::istringstream header( line );
      std::string keyword;
      header >> keyword >> current.id >> current.hex >> current.mc;
      if ( !header )
      {
        throw std::invalid_argument( "class table: malformed entry header" );
      }
      netlist.clear();
      in_entry = true;
      continue;
    }
    if ( !in_entry )
    {
      throw std::invalid_argument( "class table: netlist line outside an entry" );
    }
    netlist += line;
    netlist += '\n';
    if ( line.rfind( "f ", 0u ) == 0u )
    {
      current.netlist = netlist;
      current.network = parse_netlist( netlist, 5u );
      entries.push_back( current );
      in_entry = false;
    }
  }
  if ( in_entry )
  {
    throw std::invalid_argument( "class table: trailing incomplete entry" );
  }
  return entries;
}

} // namespace detail

/*! \brief The 48 class representatives, parsed once from the embedded data. */
inline std::vector<class_table_entry> const& class_table()
{
  static std::vector<class_table_entry> const entries = detail::parse_class_table( detail::table2_raw );
  return entries;
}

} // namespace mcsyn
