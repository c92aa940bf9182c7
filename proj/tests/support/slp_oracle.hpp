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

/* Test-only brute-force search for the shortest XOR straight-line program.
 * Independent of the SAT-based implementation: plain depth-first search
 * over all step sequences, pruning only duplicate and constant forms. */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace mcsyn_test
{

inline bool slp_targets_met( std::vector<uint64_t> const& nodes, std::vector<uint64_t> const& targets )
{
  for ( auto const t : targets )
  {
    if ( __builtin_popcountll( t ) >= 2 && std::find( nodes.begin(), nodes.end(), t ) == nodes.end() )
    {
      return false;
    }
  }
  return true;
}

inline bool slp_search( std::vector<uint64_t>& nodes, std::vector<uint64_t> const& targets, uint32_t steps_left )
{
  if ( slp_targets_met( nodes, targets ) )
  {
    return true;
  }
  if ( steps_left == 0u )
  {
    return false;
  }
  for ( size_t i = 0u; i < nodes.size(); ++i )
  {
    for ( size_t j = i + 1u; j < nodes.size(); ++j )
    {
      auto const form = nodes[i] ^ nodes[j];
      if ( form == 0u || std::find( nodes.begin(), nodes.end(), form ) != nodes.end() )
      {
        continue;
      }
      nodes.push_back( form );
      if ( slp_search( nodes, targets, steps_left - 1u ) )
      {
        nodes.pop_back();
        return true;
      }
      nodes.pop_back();
    }
  }
  return false;
}

/*! Minimum number of XOR steps computing all target rows over `cols`
 * inputs, or nullopt if more than `max_steps` are needed. */
inline std::optional<uint32_t> slp_brute_force_min( uint32_t cols, std::vector<uint64_t> const& targets,
                                                    uint32_t max_steps )
{
  std::vector<uint64_t> nodes;
  for ( uint32_t j = 0u; j < cols; ++j )
  {
    nodes.push_back( uint64_t( 1 ) << j );
  }
  for ( uint32_t k = 0u; k <= max_steps; ++k )
  {
    if ( slp_search( nodes, targets, k ) )
    {
      return k;
    }
  }
  return std::nullopt;
}

} // namespace mcsyn_test
