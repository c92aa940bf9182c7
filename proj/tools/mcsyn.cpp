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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mcsyn/class_table.hpp>
#include <mcsyn/linear_program.hpp>
#include <mcsyn/mc_encoding.hpp>
#include <mcsyn/pipeline.hpp>
#include <mcsyn/synthesis.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_unproven = 2;
constexpr int exit_mismatch = 3;

struct cli_options
{
  mcsyn::run_config config;
  std::string strategy = "cegar";
  std::string xor_opt = "none";
  std::string format = "netlist";
  std::optional<uint32_t> preset;
  bool no_nonconstant_fanin = false;
  bool no_commutativity = false;
  bool no_symmetric_variables = false;
  bool no_all_used = false;
  bool no_subset_free = false;
  bool no_multilevel_subset = false;

  mcsyn::run_config resolve() const
  {
    auto rc = preset ? mcsyn::run_config::preset( *preset ) : config;
    if ( !preset )
    {
      if ( xor_opt == "none" )
      {
        rc.xor_opt = mcsyn::xor_mode::none;
      }
      else if ( xor_opt == "enumerate" )
      {
        rc.xor_opt = mcsyn::xor_mode::enumerate_best;
      }
      else if ( xor_opt == "heuristic" )
      {
        rc.xor_opt = mcsyn::xor_mode::heuristic;
      }
      else if ( xor_opt == "heuristic+sat" )
      {
        rc.xor_opt = mcsyn::xor_mode::heuristic_sat;
      }
      else
      {
        throw CLI::ValidationError( "--xor", "unknown mode '" + xor_opt + "'" );
      }
    }
    else
    {
      rc.enumeration_limit = config.enumeration_limit;
      rc.abstract_conflicts = config.abstract_conflicts;
      rc.linear_conflicts = config.linear_conflicts;
      rc.r_low = config.r_low;
      rc.r_high = config.r_high;
    }
    rc.strategy = strategy == "direct" ? mcsyn::strategy_kind::direct : mcsyn::strategy_kind::cegar;
    if ( format == "netlist" )
    {
      rc.format = mcsyn::output_format::netlist;
    }
    else if ( format == "dot" )
    {
      rc.format = mcsyn::output_format::dot;
    }
    else if ( format == "jsonl" )
    {
      rc.format = mcsyn::output_format::json_lines;
    }
    else
    {
      throw CLI::ValidationError( "--format", "unknown format '" + format + "'" );
    }
    rc.encoding.nonconstant_fanin = !no_nonconstant_fanin;
    rc.encoding.commutativity = !no_commutativity;
    rc.encoding.symmetric_variables = !no_symmetric_variables;
    rc.encoding.all_used = !no_all_used;
    rc.encoding.subset_free = !no_subset_free;
    rc.encoding.multilevel_subset = !no_multilevel_subset;
    return rc;
  }
};

uint64_t env_or( char const* name, uint64_t fallback )
{
  if ( auto const* value = std::getenv( name ) )
  {
    return std::strtoull( value, nullptr, 10 );
  }
  return fallback;
}

void add_run_options( CLI::App* cmd, cli_options& opts )
{
  opts.config.abstract_conflicts = env_or( "MCSYN_ABSTRACT_CONFLICTS", 50000u );
  opts.config.linear_conflicts = env_or( "MCSYN_LINEAR_CONFLICTS", 500000u );
  cmd->add_option( "--strategy", opts.strategy, "search strategy: direct or cegar" )
      ->check( CLI::IsMember( { "direct", "cegar" } ) );
  cmd->add_option( "--preset", opts.preset, "experiment preset 1..4 (sets the XOR mode)" )
      ->check( CLI::Range( 1u, 4u ) );
  cmd->add_option( "--xor", opts.xor_opt, "XOR stage: none, enumerate, heuristic, heuristic+sat" );
  cmd->add_option( "--limit", opts.config.enumeration_limit, "solution/iteration cap for the XOR stage" );
  cmd->add_option( "--abstract-conflicts", opts.config.abstract_conflicts,
                   "conflict budget after the first optimum (0 = unlimited)" );
  cmd->add_option( "--linear-conflicts", opts.config.linear_conflicts,
                   "conflict budget for the linear-program search (0 = unlimited)" );
  cmd->add_option( "--r-low", opts.config.r_low, "override the lower bound of the sweep" );
  cmd->add_option( "--r-high", opts.config.r_high, "abort if the sweep exceeds this step count" );
  cmd->add_option( "--format", opts.format, "output format: netlist, dot, jsonl" );
  cmd->add_flag( "--no-nonconstant-fanin", opts.no_nonconstant_fanin, "disable the nonempty fan-in clauses" );
  cmd->add_flag( "--no-commutativity", opts.no_commutativity, "disable fan-in ordering" );
  cmd->add_flag( "--no-symmetric-variables", opts.no_symmetric_variables, "disable symmetric-variable ordering" );
  cmd->add_flag( "--no-all-used", opts.no_all_used, "disable the all-used clauses" );
  cmd->add_flag( "--no-subset-free", opts.no_subset_free, "disable the subset-free clauses" );
  cmd->add_flag( "--no-multilevel-subset", opts.no_multilevel_subset, "disable the multi-level subset clauses" );
}

mcsyn::truth_table parse_function( std::string const& hex, std::optional<uint32_t> vars )
{
  auto const n = vars ? *vars : mcsyn::infer_num_vars( hex );
  return mcsyn::truth_table::from_hex( hex, n );
}

nlohmann::json report_json( mcsyn::function_report const& report )
{
  return {
      { "hex", report.hex },
      { "vars", report.num_vars },
      { "mc", report.mc },
      { "xor", report.xor_count },
      { "status", report.status == mcsyn::synthesis_status::proven_optimal ? "optimal" : "upper-bound" },
      { "millis", report.millis },
  };
}

void print_report( std::ostream& os, mcsyn::function_report const& report, mcsyn::output_format format )
{
  switch ( format )
  {
  case mcsyn::output_format::json_lines:
    os << report_json( report ).dump() << '\n';
    return;
  case mcsyn::output_format::dot:
    os << mcsyn::to_dot( report.network );
    return;
  case mcsyn::output_format::netlist:
    break;
  }
  os << "MC = " << report.mc
     << ( report.status == mcsyn::synthesis_status::proven_optimal ? " (proven optimal)" : " (upper bound)" ) << '\n';
  os << "XOR = " << report.xor_count << ( report.xor_optimal ? " (proven for this structure)" : "" ) << '\n';
  if ( report.inverted )
  {
    os << "output inverted\n";
  }
  os << mcsyn::to_netlist( report.network );
  os << "# solves=" << report.stats.solve_calls << " conflicts=" << report.stats.conflicts
     << " constrained=" << report.stats.constrained_assignments << " time=" << report.millis << " ms\n";
}

int run_mc( std::string const& hex, std::optional<uint32_t> vars, cli_options const& opts )
{
  auto const config = opts.resolve();
  auto const report = mcsyn::synthesize_function( parse_function( hex, vars ), config );
  print_report( std::cout, report, config.format );
  return report.status == mcsyn::synthesis_status::proven_optimal ? exit_ok : exit_unproven;
}

int run_enumerate( std::string const& hex, std::optional<uint32_t> vars, cli_options const& opts, bool best_xor )
{
  auto const config = opts.resolve();
  auto const raw = parse_function( hex, vars );
  if ( config.xor_opt == mcsyn::xor_mode::heuristic || config.xor_opt == mcsyn::xor_mode::heuristic_sat )
  {
    /* the sorter-based stages already deliver a single best network */
    auto const report = mcsyn::synthesize_function( raw, config );
    print_report( std::cout, report, config.format );
    return report.status == mcsyn::synthesis_status::proven_optimal ? exit_ok : exit_unproven;
  }
  auto const [f, inverted] = mcsyn::normalize( raw );
  auto const search = config.strategy == mcsyn::strategy_kind::direct
                          ? mcsyn::find_mc_direct( f, config.r_low.value_or( mcsyn::mc_lower_bound( f ) ), config.encoding )
                          : mcsyn::find_mc_cegar( f, config.r_low.value_or( mcsyn::mc_lower_bound( f ) ), config.encoding );
  auto const enumerated = mcsyn::enumerate_optimum( f, search.mc, config.enumeration_limit, config.encoding,
                                                    config.abstract_conflicts );
  auto solutions = enumerated.solutions;
  if ( solutions.empty() )
  {
    solutions.push_back( search.witness );
  }
  std::cout << "MC = " << search.mc << ", " << solutions.size() << " solution(s)"
            << ( enumerated.exhausted ? " (complete)" : "" ) << '\n';
  auto const emit = [&]( mcsyn::abstract_xag const& solution ) {
    auto network = mcsyn::to_xag( solution );
    if ( inverted )
    {
      network.set_output( network.output(), true );
    }
    std::cout << "# AND = " << network.num_ands() << ", XOR = " << network.num_xors() << '\n'
              << mcsyn::to_netlist( network );
  };
  if ( best_xor )
  {
    auto best = solutions.front();
    for ( auto const& s : solutions )
    {
      if ( mcsyn::xor_cost( s ) < mcsyn::xor_cost( best ) )
      {
        best = s;
      }
    }
    emit( best );
  }
  else
  {
    for ( auto const& s : solutions )
    {
      emit( s );
    }
  }
  return exit_ok;
}

int run_batch( std::string const& path, std::optional<uint32_t> vars, cli_options const& opts, uint32_t jobs )
{
  auto const config = opts.resolve();
  std::ifstream in( path );
  if ( !in )
  {
    std::cerr << "cannot open " << path << '\n';
    return exit_usage;
  }
  std::vector<std::string> lines;
  std::string line;
  while ( std::getline( in, line ) )
  {
    while ( !line.empty() && ( line.back() == '\r' || line.back() == ' ' ) )
    {
      line.pop_back();
    }
    if ( !line.empty() )
    {
      lines.push_back( line );
    }
  }

  struct row
  {
    bool failed = false;
    std::string error;
    mcsyn::function_report report;
  };
  std::vector<row> rows( lines.size() );
  auto const work = [&]( size_t index ) {
    try
    {
      rows[index].report = mcsyn::synthesize_function( parse_function( lines[index], vars ), config );
    }
    catch ( std::exception const& e )
    {
      rows[index].failed = true;
      rows[index].error = e.what();
    }
  };
  if ( jobs <= 1u )
  {
    for ( size_t i = 0u; i < lines.size(); ++i )
    {
      work( i );
    }
  }
  else
  {
    std::vector<std::thread> workers;
    std::mutex mutex;
    size_t next = 0u;
    for ( auto t = 0u; t < jobs; ++t )
    {
      workers.emplace_back( [&]() {
        while ( true )
        {
          size_t index;
          {
            std::lock_guard<std::mutex> guard( mutex );
            if ( next >= lines.size() )
            {
              return;
            }
            index = next++;
          }
          work( index );
        }
      } );
    }
    for ( auto& w : workers )
    {
      w.join();
    }
  }

  uint64_t total_and = 0u, total_xor = 0u;
  uint32_t errors = 0u, unproven = 0u;
  double total_ms = 0.0;
  for ( size_t i = 0u; i < rows.size(); ++i )
  {
    if ( rows[i].failed )
    {
      ++errors;
      std::cout << lines[i] << " error: " << rows[i].error << '\n';
      continue;
    }
    auto const& r = rows[i].report;
    if ( config.format == mcsyn::output_format::json_lines )
    {
      std::cout << report_json( r ).dump() << '\n';
    }
    else
    {
      std::cout << r.hex << " mc=" << r.mc << " xor=" << r.xor_count << " status="
                << ( r.status == mcsyn::synthesis_status::proven_optimal ? "optimal" : "upper-bound" )
                << " millis=" << r.millis << '\n';
    }
    total_and += r.mc;
    total_xor += r.xor_count;
    total_ms += r.millis;
    unproven += r.status == mcsyn::synthesis_status::proven_optimal ? 0u : 1u;
  }
  std::cout << "# total: functions=" << rows.size() - errors << " AND=" << total_and << " XOR=" << total_xor
            << " errors=" << errors << " time=" << total_ms / 1000.0 << " s\n";
  if ( errors > 0u )
  {
    return exit_usage;
  }
  return unproven > 0u ? exit_unproven : exit_ok;
}

int run_verify_table( cli_options const& opts )
{
  auto const config = opts.resolve();
  auto mismatches = 0u;
  for ( auto const& entry : mcsyn::class_table() )
  {
    auto const f = entry.function();
    auto ok = true;
    std::string note;
    if ( mcsyn::simulate( entry.network ) != f )
    {
      ok = false;
      note = "reference netlist does not match the truth table";
    }
    mcsyn::function_report report;
    if ( ok )
    {
      report = mcsyn::synthesize_function( f, config );
      if ( report.mc != entry.mc )
      {
        ok = false;
        note = "synthesized MC " + std::to_string( report.mc ) + " differs from listed " + std::to_string( entry.mc );
      }
    }
    if ( ok && entry.mc >= 1u && entry.mc - 1u >= mcsyn::mc_lower_bound( f ) )
    {
      mcsyn::mc_instance instance( f, entry.mc - 1u, config.encoding );
      instance.constrain_all();
      if ( instance.session().solve().status != mcsyn::sat::solve_status::unsat )
      {
        ok = false;
        note = "instance one step below the listed MC is not unsatisfiable";
      }
    }
    std::cout << "class " << entry.id << ' ' << entry.hex << " mc=" << entry.mc << ( ok ? " ok" : " MISMATCH" );
    if ( !ok )
    {
      std::cout << " (" << note << ')';
      ++mismatches;
    }
    std::cout << '\n';
  }
  std::cout << ( mismatches == 0u ? "48/48 entries verified\n" : "verification failed\n" );
  return mismatches == 0u ? exit_ok : exit_mismatch;
}

int run_slp( std::string const& path, bool cancellation_free, bool ordering, std::optional<uint32_t> primary,
             uint64_t conflicts )
{
  std::ifstream in( path );
  if ( !in )
  {
    std::cerr << "cannot open " << path << '\n';
    return exit_usage;
  }
  auto const matrix = mcsyn::parse_matrix( in );
  mcsyn::slp_options options;
  options.cancellation_free = cancellation_free;
  options.ordering = ordering;
  options.num_primary = primary.value_or( matrix.cols );
  options.conflict_limit = conflicts;
  auto const result = mcsyn::slp_minimize( matrix, options );
  std::cout << "steps = " << result.net.num_steps() << ( result.optimal ? "" : " (fallback, not proven minimal)" )
            << '\n';
  auto index = matrix.cols + 1u;
  for ( auto const& [a, b] : result.net.steps )
  {
    std::cout << 'x' << index++ << " = x" << a << " ^ x" << b << '\n';
  }
  for ( size_t l = 0u; l < result.net.outputs.size(); ++l )
  {
    std::cout << 'f' << l + 1u << " = x" << result.net.outputs[l] << '\n';
  }
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "exact multiplicative-complexity synthesis of XOR-AND graphs" };
  app.require_subcommand( 1 );

  cli_options opts;
  std::string hex;
  std::optional<uint32_t> vars;
  uint32_t jobs = 1u;
  bool best_xor = false;
  std::string file_path;
  bool cancellation_free = false;
  bool ordering = false;
  std::optional<uint32_t> primary;

  auto* mc = app.add_subcommand( "mc", "minimum AND count and a witness network for one function" );
  mc->add_option( "hex", hex, "truth table in hex, most significant digit first" )->required();
  mc->add_option( "--vars", vars, "number of variables (inferred from the digit count if omitted)" );
  add_run_options( mc, opts );

  auto* enumerate = app.add_subcommand( "enumerate", "enumerate optimum networks, optionally keep the XOR-cheapest" );
  enumerate->add_option( "hex", hex, "truth table in hex" )->required();
  enumerate->add_option( "--vars", vars, "number of variables" );
  enumerate->add_flag( "--best-xor", best_xor, "report only the solution with the fewest XOR gates" );
  add_run_options( enumerate, opts );

  auto* batch = app.add_subcommand( "batch", "synthesize every function listed in a file, one hex table per line" );
  batch->add_option( "file", file_path, "input file" )->required();
  batch->add_option( "--vars", vars, "force the variable count for all lines" );
  batch->add_option( "--jobs", jobs, "worker threads" );
  add_run_options( batch, opts );

  auto* verify = app.add_subcommand( "verify-table", "check the embedded 5-variable class table end to end" );
  add_run_options( verify, opts );

  auto* slp = app.add_subcommand( "slp", "shortest linear XOR program for a Boolean matrix" );
  slp->add_option( "file", file_path, "matrix file: 'm n' header, then m rows of n bits" )->required();
  slp->add_flag( "--cancellation-free", cancellation_free, "forbid cancellations in the network" );
  slp->add_flag( "--ordering", ordering, "apply the acyclicity restrictions for XAG rebuilding" );
  slp->add_option( "--primary", primary, "number of primary-input columns (with --ordering)" );
  uint64_t slp_conflicts = env_or( "MCSYN_LINEAR_CONFLICTS", 500000u );
  slp->add_option( "--linear-conflicts", slp_conflicts, "conflict budget per decision problem" );

  try
  {
    app.parse( argc, argv );
    if ( mc->parsed() )
    {
      return run_mc( hex, vars, opts );
    }
    if ( enumerate->parsed() )
    {
      return run_enumerate( hex, vars, opts, best_xor );
    }
    if ( batch->parsed() )
    {
      return run_batch( file_path, vars, opts, jobs );
    }
    if ( verify->parsed() )
    {
      return run_verify_table( opts );
    }
    if ( slp->parsed() )
    {
      return run_slp( file_path, cancellation_free, ordering, primary, slp_conflicts );
    }
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return e.get_exit_code() == 0 ? exit_ok : exit_usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
