/* pblin: pseudo-Boolean linearization toolkit
 * Copyright (C) 2026 the pblin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pblin/pblin.hpp>

namespace
{

/* exit codes: 0 ok, 1 bad input, 2 cap exceeded, 3 bridge failure */
constexpr int exit_bad_input = 1;
constexpr int exit_cap = 2;
constexpr int exit_bridge = 3;

struct cli_config
{
  pblin::caps limits;
  std::optional<pblin::solver_bridge_config> bridge;
  bool csv = false;
  long long seed = 0; /* reserved for randomized subcommands */
  int workers = 1;
};

long long parse_ll( const std::string& text, const std::string& what )
{
  try
  {
    std::size_t used = 0;
    const long long v = std::stoll( text, &used );
    pblin::require_input( used == text.size(), what + ": trailing characters in '" + text + "'" );
    return v;
  }
  catch ( const pblin::input_error& )
  {
    throw;
  }
  catch ( const std::exception& )
  {
    throw pblin::input_error( what + ": cannot parse '" + text + "'" );
  }
}

/* caps are overridable downward; raising one requires --unsafe-caps */
void apply_cap( int& slot, const std::string& key, const std::string& value, bool unsafe )
{
  const long long v = parse_ll( value, "config " + key );
  pblin::require_input( v >= 0, "config " + key + ": negative cap" );
  pblin::require_input( unsafe || v <= slot,
                        "config " + key + ": raising a cap requires --unsafe-caps" );
  slot = static_cast<int>( v );
}

void load_config( cli_config& cfg, const std::string& path, bool unsafe )
{
  const auto entries = pblin::parse_config_file( path );
  for ( const auto& [key, value] : entries )
  {
    if ( key == "solver_cmd" )
    {
      if ( !cfg.bridge )
      {
        cfg.bridge.emplace();
      }
      cfg.bridge->command_template = value;
    }
    else if ( key == "solver_mode" )
    {
      if ( !cfg.bridge )
      {
        cfg.bridge.emplace();
      }
      pblin::require_input( value == "lp" || value == "ip", "config solver_mode: expected lp or ip" );
      cfg.bridge->mode = value == "lp" ? pblin::solve_mode::lp_relaxation
                                       : pblin::solve_mode::integer;
    }
    else if ( key == "output" )
    {
      pblin::require_input( value == "table" || value == "csv",
                            "config output: expected table or csv" );
      cfg.csv = value == "csv";
    }
    else if ( key == "seed" )
    {
      cfg.seed = parse_ll( value, "config seed" );
    }
    else if ( key == "workers" )
    {
      cfg.workers = static_cast<int>( parse_ll( value, "config workers" ) );
    }
    else if ( key == "cap_enumeration" )
    {
      apply_cap( cfg.limits.enumeration, key, value, unsafe );
    }
    else if ( key == "cap_pss_length" )
    {
      apply_cap( cfg.limits.pss_length, key, value, unsafe );
    }
    else if ( key == "cap_cover_targets" )
    {
      apply_cap( cfg.limits.cover_targets, key, value, unsafe );
    }
    else if ( key == "cap_cover_k" )
    {
      apply_cap( cfg.limits.cover_k, key, value, unsafe );
    }
    else if ( key == "cap_lc_arity" )
    {
      apply_cap( cfg.limits.lc_arity, key, value, unsafe );
    }
    else if ( key == "cap_nogood_arity" )
    {
      apply_cap( cfg.limits.nogood_arity, key, value, unsafe );
    }
    else if ( key == "cap_labs_expand" )
    {
      apply_cap( cfg.limits.labs_expand, key, value, unsafe );
    }
    else if ( key == "cap_labs_indicator" )
    {
      apply_cap( cfg.limits.labs_indicator, key, value, unsafe );
    }
    else if ( key == "cap_labs_exhaustive" )
    {
      apply_cap( cfg.limits.labs_exhaustive, key, value, unsafe );
    }
    else if ( key == "cap_table_arity" )
    {
      apply_cap( cfg.limits.table_arity, key, value, unsafe );
    }
    else
    {
      throw pblin::input_error( "config: unknown key '" + key + "'" );
    }
  }
}

pblin::multilinear_poly read_poly_file( const std::string& path )
{
  std::ifstream in( path );
  pblin::require_input( static_cast<bool>( in ), "cannot open polynomial file " + path );
  return pblin::read_poly( in );
}

pblin::boolean_fn read_tt_file( const std::string& path )
{
  std::ifstream in( path );
  pblin::require_input( static_cast<bool>( in ), "cannot open truth table file " + path );
  return pblin::read_truth_table( in );
}

void emit( const std::string& text, const std::string& out_path )
{
  if ( out_path.empty() )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( out_path );
  pblin::require_input( static_cast<bool>( out ), "cannot write " + out_path );
  out << text;
}

/* ---- subcommand bodies ---------------------------------------------------*/

void run_expand( const cli_config& cfg, const std::string& input, int labs_n,
                 const std::string& out_path )
{
  pblin::multilinear_poly poly( 0 );
  if ( labs_n > 0 )
  {
    poly = pblin::f_bern_poly( labs_n, cfg.limits );
  }
  else
  {
    pblin::require_input( !input.empty(), "expand: need a polynomial file or --labs N" );
    poly = read_poly_file( input );
  }
  emit( pblin::poly_to_string( poly ), out_path );
}

void run_lc( const cli_config& cfg, const std::string& input, const std::string& family,
             const pblin::lc_search_budget& budget )
{
  const auto poly = read_poly_file( input );
  const int n = poly.arity();
  const auto values = [&poly]( const pblin::point_assignment& x ) { return poly.evaluate( x ); };

  pblin::linearization_certificate cert;
  long long k = 0;
  bool exact = true;

  if ( family == "M" )
  {
    cert = pblin::monomial_certificate( poly );
    k = static_cast<long long>( cert.size() );
  }
  else if ( family == "C" )
  {
    const auto result = pblin::lc_signed_products_exact( poly, budget, cfg.limits );
    cert = result.certificate;
    exact = result.exact;
    k = static_cast<long long>( cert.size() );
  }
  else if ( family == "B" )
  {
    const auto result = pblin::lc_boolean_exact( values, n, cfg.limits );
    cert = result.certificate;
    exact = result.exact;
    k = result.k;
  }
  else
  {
    throw pblin::input_error( "lc: family must be M, C, or B" );
  }

  const bool verified = pblin::verify_certificate( values, n, cert, cfg.limits );
  if ( cfg.csv )
  {
    std::cout << family << "," << k << "," << ( exact ? 1 : 0 ) << "," << ( verified ? 1 : 0 )
              << "\n";
  }
  else
  {
    std::cout << "family=" << family << "\n";
    std::cout << "k=" << k << "\n";
    std::cout << "exact=" << ( exact ? "yes" : "no (budget exhausted; upper bound)" ) << "\n";
    std::cout << "verified=" << ( verified ? "yes" : "NO" ) << "\n";
    std::cout << "certificate:\n" << pblin::certificate_to_string( cert );
  }
  pblin::require_input( verified, "lc: certificate failed verification" );
}

void run_model( const cli_config& cfg, const std::string& kind, int n, const std::string& cert_path,
                const std::string& tt_path, bool compat, const std::string& ld,
                const std::string& pairs, const std::string& lp_path )
{
  pblin::milp_model model;
  if ( kind == "standard" )
  {
    pblin::require_input( n > 0, "model standard: need N" );
    model = pblin::standard_ip( n, cfg.limits );
  }
  else if ( kind == "indicator-only" )
  {
    pblin::require_input( n > 0, "model indicator-only: need N" );
    model = pblin::indicator_only_ip( n, cfg.limits );
  }
  else if ( kind == "value-indicator" )
  {
    pblin::require_input( n > 0, "model value-indicator: need N" );
    pblin::labs_instance inst( n );
    if ( compat )
    {
      inst = pblin::labs_instance::compat( n );
    }
    if ( !ld.empty() )
    {
      pblin::require_input( ld == "parity" || ld == "full", "model: --ld expects parity or full" );
      inst.ld = ld == "parity" ? pblin::ld_mode::parity : pblin::ld_mode::full_range;
    }
    if ( !pairs.empty() )
    {
      pblin::require_input( pairs == "upper" || pairs == "ordered",
                            "model: --pairs expects upper or ordered" );
      inst.pairs = pairs == "upper" ? pblin::pair_var_mode::upper_triangle
                                    : pblin::pair_var_mode::ordered_compat;
    }
    model = pblin::value_indicator_ip( inst );
  }
  else if ( kind == "fortet" )
  {
    pblin::require_input( !cert_path.empty(), "model fortet: need --cert FILE" );
    std::ifstream in( cert_path );
    pblin::require_input( static_cast<bool>( in ), "cannot open certificate file " + cert_path );
    const auto cert = pblin::read_certificate( in );
    pblin::linear_part linear{ cert.linear, cert.offset };
    std::vector<std::pair<pblin::signed_product, pblin::rational>> products;
    for ( const auto& term : cert.terms )
    {
      pblin::require_input( term.family != pblin::fn_family::boolean,
                            "model fortet: certificate must contain only product terms" );
      products.emplace_back( term.product, term.weight );
    }
    model = pblin::fortet_model( linear, products, cert.arity );
  }
  else if ( kind == "nogood" )
  {
    pblin::require_input( !tt_path.empty(), "model nogood: need --tt FILE" );
    const auto fn = read_tt_file( tt_path );
    model = pblin::nogood_model( { { fn, pblin::rational( 1 ) } }, {}, fn.arity(), cfg.limits );
  }
  else
  {
    throw pblin::input_error(
        "model: kind must be standard, indicator-only, value-indicator, fortet, or nogood" );
  }

  const auto stats = model.stats();
  std::cout << "vars=" << stats.vars << " cons=" << stats.cons << " nonzeros=" << stats.nonzeros
            << "\n";
  if ( !lp_path.empty() )
  {
    emit( pblin::lp_to_string( model ), lp_path );
  }
}

void run_labs_solve( const cli_config& cfg, int n )
{
  const auto result = pblin::exhaustive_solve( n, cfg.workers, cfg.limits );
  if ( cfg.csv )
  {
    std::cout << n << "," << result.optimum << "," << result.witness.str() << "," << result.points
              << "\n";
  }
  else
  {
    std::cout << "opt=" << result.optimum << " witness=" << result.witness.str()
              << " points=" << result.points << "\n";
  }
}

void run_labs_table( const cli_config& cfg, const std::string& range, bool displayed, bool timings,
                     int solve_max )
{
  const auto dots = range.find( ".." );
  pblin::require_input( dots != std::string::npos, "table: range must look like 3..10" );
  const int lo = static_cast<int>( parse_ll( range.substr( 0, dots ), "table range" ) );
  const int hi = static_cast<int>( parse_ll( range.substr( dots + 2 ), "table range" ) );
  pblin::table_options opts;
  opts.compat = !displayed;
  opts.timings = timings;
  opts.workers = cfg.workers;
  opts.solve_max = solve_max;
  opts.bridge = cfg.bridge;
  std::cout << pblin::table_harness( lo, hi, opts, cfg.limits );
}

void run_separate( const std::string& tt_path, const std::string& point_text, double y_value )
{
  const auto fn = read_tt_file( tt_path );
  std::vector<double> x_hat;
  std::size_t pos = 0;
  while ( pos <= point_text.size() )
  {
    auto comma = point_text.find( ',', pos );
    if ( comma == std::string::npos )
    {
      comma = point_text.size();
    }
    const std::string item = point_text.substr( pos, comma - pos );
    try
    {
      std::size_t used = 0;
      const double v = std::stod( item, &used );
      pblin::require_input( used == item.size() && v >= 0.0 && v <= 1.0,
                            "separate: coordinates must be numbers in [0,1]" );
      x_hat.push_back( v );
    }
    catch ( const pblin::input_error& )
    {
      throw;
    }
    catch ( const std::exception& )
    {
      throw pblin::input_error( "separate: malformed point entry '" + item + "'" );
    }
    pos = comma + 1;
  }
  pblin::require_input( y_value >= 0.0 && y_value <= 1.0, "separate: y must be in [0,1]" );

  const auto cut = pblin::separate_nogood( fn, y_value, x_hat );
  if ( !cut )
  {
    std::cout << "none\n";
    return;
  }
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.6g", cut->violation );
  std::cout << "violated: " << cut->str() << "\n";
  std::cout << "violation=" << buf << "\n";
  std::cout << "vertex=" << cut->vertex.str() << "\n";
}

} /* namespace */

int main( int argc, char** argv )
{
  CLI::App app{ "pblin: linearization complexities and IP models for pseudo-Boolean functions" };
  app.require_subcommand( 1 );

  std::string config_path, solver_cmd, solver_mode;
  bool csv = false, unsafe_caps = false;
  long long seed = 0;
  int workers = 1;
  app.add_option( "--config", config_path, "key=value configuration file" );
  app.add_flag( "--csv", csv, "machine-readable output" );
  app.add_option( "--seed", seed, "seed for randomized subcommands (reserved)" );
  app.add_option( "--workers", workers, "worker threads; results are independent of this" )
      ->check( CLI::Range( 1, 256 ) );
  app.add_flag( "--unsafe-caps", unsafe_caps, "allow raising enumeration caps" );
  app.add_option( "--solver-cmd", solver_cmd,
                  "external solver command with {lp} and {sol} placeholders" );
  app.add_option( "--solver-mode", solver_mode, "external solver mode: lp or ip" );

  auto* expand = app.add_subcommand( "expand", "print a polynomial in canonical text form" );
  std::string expand_input, expand_out;
  int expand_labs = 0;
  expand->add_option( "input", expand_input, "polynomial file" );
  expand->add_option( "--labs", expand_labs, "expand the length-N autocorrelation objective" );
  expand->add_option( "-o,--output", expand_out, "write to a file instead of stdout" );

  auto* lc = app.add_subcommand( "lc", "linearization complexity of a polynomial" );
  std::string lc_input, lc_family;
  pblin::lc_search_budget budget;
  lc->add_option( "input", lc_input, "polynomial file" )->required();
  lc->add_option( "--family", lc_family, "function family: M, C, or B" )->required();
  lc->add_option( "--max-degree", budget.max_degree, "family C: max candidate degree" );
  lc->add_option( "--max-support", budget.max_support, "family C: max support size searched" );
  lc->add_option( "--time-limit", budget.time_limit_s, "family C: search time limit in seconds" );

  auto* model = app.add_subcommand( "model", "build an IP model and print its size" );
  std::string model_kind, model_cert, model_tt, model_ld, model_pairs, model_lp;
  int model_n = 0;
  bool model_compat = false;
  model->add_option( "kind", model_kind,
                     "standard | indicator-only | value-indicator | fortet | nogood" )
      ->required();
  model->add_option( "N", model_n, "sequence length for the LABS builders" );
  model->add_option( "--cert", model_cert, "certificate file (fortet)" );
  model->add_option( "--tt", model_tt, "truth table file (nogood)" );
  model->add_flag( "--compat", model_compat, "value-indicator: published size-table variant" );
  model->add_option( "--ld", model_ld, "value-indicator: parity | full" );
  model->add_option( "--pairs", model_pairs, "value-indicator: upper | ordered" );
  model->add_option( "--write-lp", model_lp, "also export LP format to this path" );

  auto* labs = app.add_subcommand( "labs", "low-autocorrelation binary sequences" );
  labs->require_subcommand( 1 );
  auto* labs_solve = labs->add_subcommand( "solve", "exhaustive exact optimum" );
  int labs_solve_n = 0;
  labs_solve->add_option( "N", labs_solve_n, "sequence length" )->required();
  auto* labs_energy_cmd = labs->add_subcommand( "energy", "energy of a +/- sequence" );
  std::string labs_seq;
  labs_energy_cmd->add_option( "sequence", labs_seq, "e.g. +++-" )->required();
  auto* labs_table = labs->add_subcommand( "table", "CSV model comparison over a range of N" );
  std::string labs_range;
  bool labs_displayed = false, labs_timings = false;
  int labs_solve_max = 28;
  labs_table->add_option( "range", labs_range, "e.g. 3..10" )->required();
  labs_table->add_flag( "--displayed", labs_displayed,
                        "use the displayed value-indicator model instead of the compat variant" );
  labs_table->add_flag( "--timings", labs_timings, "fill the time_s column (non-reproducible)" );
  labs_table->add_option( "--solve-max", labs_solve_max, "largest N solved exhaustively" );

  auto* separate = app.add_subcommand( "separate", "no-good separation at a fractional point" );
  std::string sep_tt, sep_point;
  double sep_y = 0.0;
  separate->add_option( "--tt", sep_tt, "truth table file" )->required();
  separate->add_option( "--point", sep_point, "comma-separated coordinates in [0,1]" )->required();
  separate->add_option( "--y", sep_y, "indicator value in [0,1]" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int rc = app.exit( e );
    return rc == 0 ? 0 : exit_bad_input;
  }

  try
  {
    cli_config cfg;
    if ( !config_path.empty() )
    {
      load_config( cfg, config_path, unsafe_caps );
    }
    if ( csv )
    {
      cfg.csv = true;
    }
    if ( seed != 0 )
    {
      cfg.seed = seed;
    }
    if ( workers != 1 )
    {
      cfg.workers = workers;
    }
    if ( const char* env_cmd = std::getenv( "PBLIN_SOLVER_CMD" ); env_cmd && *env_cmd )
    {
      if ( !cfg.bridge )
      {
        cfg.bridge.emplace();
      }
      cfg.bridge->command_template = env_cmd;
    }
    if ( const char* env_mode = std::getenv( "PBLIN_SOLVER_MODE" ); env_mode && *env_mode )
    {
      if ( cfg.bridge )
      {
        const std::string m = env_mode;
        pblin::require_input( m == "lp" || m == "ip", "PBLIN_SOLVER_MODE: expected lp or ip" );
        cfg.bridge->mode = m == "lp" ? pblin::solve_mode::lp_relaxation
                                     : pblin::solve_mode::integer;
      }
    }
    if ( !solver_cmd.empty() )
    {
      if ( !cfg.bridge )
      {
        cfg.bridge.emplace();
      }
      cfg.bridge->command_template = solver_cmd;
    }
    if ( !solver_mode.empty() )
    {
      pblin::require_input( solver_mode == "lp" || solver_mode == "ip",
                            "--solver-mode: expected lp or ip" );
      if ( cfg.bridge )
      {
        cfg.bridge->mode = solver_mode == "lp" ? pblin::solve_mode::lp_relaxation
                                               : pblin::solve_mode::integer;
      }
    }
    if ( cfg.bridge && cfg.bridge->command_template.empty() )
    {
      cfg.bridge.reset();
    }

    if ( expand->parsed() )
    {
      run_expand( cfg, expand_input, expand_labs, expand_out );
    }
    else if ( lc->parsed() )
    {
      run_lc( cfg, lc_input, lc_family, budget );
    }
    else if ( model->parsed() )
    {
      run_model( cfg, model_kind, model_n, model_cert, model_tt, model_compat, model_ld,
                 model_pairs, model_lp );
    }
    else if ( labs->parsed() )
    {
      if ( labs_solve->parsed() )
      {
        run_labs_solve( cfg, labs_solve_n );
      }
      else if ( labs_energy_cmd->parsed() )
      {
        std::cout << pblin::labs_energy( pblin::spin_sequence::parse( labs_seq ) ) << "\n";
      }
      else if ( labs_table->parsed() )
      {
        run_labs_table( cfg, labs_range, labs_displayed, labs_timings, labs_solve_max );
      }
    }
    else if ( separate->parsed() )
    {
      run_separate( sep_tt, sep_point, sep_y );
    }
    return 0;
  }
  catch ( const pblin::cap_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  }
  catch ( const pblin::bridge_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bridge;
  }
  catch ( const pblin::input_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
}
