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
  \file pipeline.hpp
  \brief Run configurations, experiment presets, and the per-function driver
*/

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "synthesis.hpp"
#include "truth_table.hpp"
#include "xag.hpp"

namespace mcsyn
{

enum class output_format
{
  netlist,
  dot,
  json_lines
};

/*! \brief Full configuration of a synthesis run.
 *
 * The four numbered presets differ only in the XOR stage: a single
 * witness, the best of up to 50 enumerated solutions, sorter-based
 * support minimization, and support minimization followed by the exact
 * linear-program search.
 */
struct run_config
{
  strategy_kind strategy = strategy_kind::cegar;
  encoding_options encoding{};
  uint32_t enumeration_limit = 50u;
  xor_mode xor_opt = xor_mode::none;
  uint64_t abstract_conflicts = 50000u;
  uint64_t linear_conflicts = 500000u;
  output_format format = output_format::netlist;
  std::optional<uint32_t> r_low;
  std::optional<uint32_t> r_high;

  static run_config preset( uint32_t run )
  {
    run_config config;
    switch ( run )
    {
    case 1u:
      config.xor_opt = xor_mode::none;
      break;
    case 2u:
      config.xor_opt = xor_mode::enumerate_best;
      break;
    case 3u:
      config.xor_opt = xor_mode::heuristic;
      break;
    case 4u:
      config.xor_opt = xor_mode::heuristic_sat;
      break;
    default:
      throw std::invalid_argument( "run_config: presets are numbered 1 to 4" );
    }
    return config;
  }

  minimize_config to_minimize_config() const
  {
    minimize_config config;
    config.strategy = strategy;
    config.encoding = encoding;
    config.xor_opt = xor_opt;
    config.enumeration_limit = enumeration_limit;
    config.abstract_conflict_limit = abstract_conflicts;
    config.linear_conflict_limit = linear_conflicts;
    config.r_low = r_low;
    config.r_high = r_high;
    return config;
  }
};

struct function_report
{
  std::string hex;
  uint32_t num_vars = 0u;
  uint32_t mc = 0u;
  bool inverted = false;
  synthesis_status status = synthesis_status::proven_optimal;
  uint32_t xor_count = 0u;
  bool xor_optimal = false;
  xag network{ 1u };
  abstract_xag best_abstract{ 1u };
  synthesis_stats stats;
  double millis = 0.0;
};

/*! \brief Runs the configured pipeline on one function and gathers the report. */
inline function_report synthesize_function( truth_table const& raw, run_config const& config )
{
  auto const start = std::chrono::steady_clock::now();
  auto result = minimize( raw, config.to_minimize_config() );
  function_report report;
  report.hex = raw.to_hex();
  report.num_vars = raw.num_vars();
  report.mc = result.search.mc;
  report.inverted = result.inverted;
  report.status = result.search.status;
  report.xor_count = result.network.num_xors();
  report.xor_optimal = result.xor_optimal;
  report.network = std::move( result.network );
  report.best_abstract = std::move( result.best_abstract );
  report.stats = result.search.stats;
  report.millis = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
  return report;
}

/*! \brief Number of variables implied by a hex string length (4 digits -> 4 vars, etc.). */
inline uint32_t infer_num_vars( std::string const& hex )
{
  for ( uint32_t n = 2u; n <= truth_table::max_num_vars; ++n )
  {
    if ( hex.size() == ( uint64_t( 1 ) << n ) / 4u )
    {
      return n;
    }
  }
  throw std::invalid_argument( "cannot infer variable count from " + std::to_string( hex.size() ) +
                               " hex digits; pass it explicitly" );
}

} // namespace mcsyn
