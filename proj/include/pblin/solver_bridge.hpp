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

/*!
  \file solver_bridge.hpp
  \brief Optional bridge to an external MILP/LP solver

  The bridge writes the LP file, runs a user-supplied command with `{lp}` and
  `{sol}` placeholders substituted, and parses the solution file:

    # comment
    =status= optimal       (optional)
    =obj= 2.0              (optional; recomputed from the assignment when absent)
    x1 1
    x2 0.5

  Variables absent from the file count as zero.  The reported objective adds
  back the model's constant offset and divides out the export scale.
*/

#pragma once

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "lp_writer.hpp"
#include "milp.hpp"
#include "rational.hpp"
#include "text.hpp"

namespace pblin
{

enum class solve_mode
{
  lp_relaxation,
  integer
};

struct solver_bridge_config
{
  std::string command_template; /* e.g. "mysolve {lp} {sol}" */
  solve_mode mode = solve_mode::lp_relaxation;
};

struct solve_outcome
{
  std::string status;
  double objective = 0.0; /* includes the model's constant offset */
  std::optional<std::map<std::string, double>> assignment;
};

namespace detail
{

inline std::string substitute_placeholder( std::string text, const std::string& key,
                                           const std::string& value )
{
  std::size_t pos = 0;
  bool found = false;
  while ( ( pos = text.find( key, pos ) ) != std::string::npos )
  {
    text.replace( pos, key.size(), value );
    pos += value.size();
    found = true;
  }
  require_input( found, "bridge: command template misses placeholder " + key );
  return text;
}

inline std::filesystem::path bridge_scratch_file( const std::string& suffix )
{
  static std::atomic<unsigned> counter{ 0 };
  const auto dir = std::filesystem::temp_directory_path();
  std::ostringstream name;
  name << "pblin_" << ::getpid() << "_" << counter.fetch_add( 1 ) << suffix;
  return dir / name.str();
}

} /* namespace detail */

/*! \brief Parses a solution file; throws bridge_error on malformed content. */
inline solve_outcome parse_solution_file( const std::filesystem::path& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw bridge_error( "bridge: solver produced no solution file at " + path.string() );
  }
  solve_outcome outcome;
  outcome.status = "solved";
  outcome.assignment.emplace();
  std::optional<double> objective;
  std::string line;
  while ( std::getline( in, line ) )
  {
    const auto hash = line.find( '#' );
    if ( hash != std::string::npos )
    {
      line = line.substr( 0, hash );
    }
    std::istringstream ls( line );
    std::string first;
    if ( !( ls >> first ) )
    {
      continue;
    }
    if ( first == "=obj=" )
    {
      double v;
      if ( !( ls >> v ) )
      {
        throw bridge_error( "bridge: malformed objective line '" + line + "'" );
      }
      objective = v;
    }
    else if ( first == "=status=" )
    {
      ls >> outcome.status;
    }
    else
    {
      double v;
      if ( !( ls >> v ) )
      {
        throw bridge_error( "bridge: malformed solution line '" + line + "'" );
      }
      ( *outcome.assignment )[first] = v;
    }
  }
  if ( objective )
  {
    outcome.objective = *objective;
  }
  else if ( outcome.assignment->empty() )
  {
    throw bridge_error( "bridge: solution file has neither objective nor assignment" );
  }
  else
  {
    outcome.objective = std::numeric_limits<double>::quiet_NaN(); /* recomputed by caller */
  }
  return outcome;
}

/*! \brief Writes the model, runs the configured command, parses the result. */
inline solve_outcome solve_external( const milp_model& model, const solver_bridge_config& config )
{
  require_input( !config.command_template.empty(), "bridge: empty command template" );

  const auto lp_path = detail::bridge_scratch_file( ".lp" );
  const auto sol_path = detail::bridge_scratch_file( ".sol" );
  {
    std::ofstream lp( lp_path );
    require_input( static_cast<bool>( lp ), "bridge: cannot write " + lp_path.string() );
    lp_write_options opts;
    opts.relax_integrality = config.mode == solve_mode::lp_relaxation;
    write_lp( model, lp, opts );
  }
  std::error_code ec;
  std::filesystem::remove( sol_path, ec );

  std::string command = detail::substitute_placeholder( config.command_template, "{lp}",
                                                        lp_path.string() );
  command = detail::substitute_placeholder( command, "{sol}", sol_path.string() );
  const int rc = std::system( command.c_str() );
  if ( rc != 0 )
  {
    std::filesystem::remove( lp_path, ec );
    throw bridge_error( "bridge: solver command failed with status " + std::to_string( rc ) );
  }

  solve_outcome outcome;
  try
  {
    outcome = parse_solution_file( sol_path );
  }
  catch ( ... )
  {
    std::filesystem::remove( lp_path, ec );
    std::filesystem::remove( sol_path, ec );
    throw;
  }
  std::filesystem::remove( lp_path, ec );
  std::filesystem::remove( sol_path, ec );

  const double scale = lp_scale( model ).convert_to<double>();
  const double offset = model.objective_offset().to_double();
  if ( std::isnan( outcome.objective ) )
  {
    double value = 0.0;
    for ( const auto& t : model.objective() )
    {
      const auto it = outcome.assignment->find( model.vars()[t.var].name );
      if ( it != outcome.assignment->end() )
      {
        value += t.coeff.to_double() * it->second;
      }
    }
    outcome.objective = value + offset;
  }
  else
  {
    outcome.objective = outcome.objective / scale + offset;
  }
  return outcome;
}

/*! \brief key=value config file; '#' starts a comment.  Returns pairs in file order. */
inline std::map<std::string, std::string> parse_config_file( const std::filesystem::path& path )
{
  std::ifstream in( path );
  require_input( static_cast<bool>( in ), "config: cannot open " + path.string() );
  std::map<std::string, std::string> entries;
  std::string line;
  while ( std::getline( in, line ) )
  {
    const auto hash = line.find( '#' );
    if ( hash != std::string::npos )
    {
      line = line.substr( 0, hash );
    }
    const auto stripped = detail::strip( line );
    if ( stripped.empty() )
    {
      continue;
    }
    const auto eq = stripped.find( '=' );
    require_input( eq != std::string::npos, "config: expected key=value, got '" + stripped + "'" );
    entries[detail::strip( stripped.substr( 0, eq ) )] =
        detail::strip( stripped.substr( eq + 1 ) );
  }
  return entries;
}

} /* namespace pblin */
