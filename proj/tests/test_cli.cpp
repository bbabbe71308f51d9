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

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace
{

struct cli_result
{
  int code;
  std::string out;
};

const char* cli_path()
{
  return std::getenv( "PBLIN_BIN" );
}

cli_result run_cli( const std::string& args )
{
  const std::string command = std::string( "\"" ) + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen( command.c_str(), "r" );
  REQUIRE( pipe != nullptr );
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ( ( got = fread( buffer.data(), 1, buffer.size(), pipe ) ) > 0 )
  {
    out.append( buffer.data(), got );
  }
  const int status = pclose( pipe );
  return { WIFEXITED( status ) ? WEXITSTATUS( status ) : -1, out };
}

std::filesystem::path scratch( const std::string& name )
{
  return std::filesystem::temp_directory_path() / ( "pblin_cli_" + name );
}

void write_file( const std::filesystem::path& path, const std::string& content )
{
  std::ofstream( path ) << content;
}

const std::string example_poly_text = "n=3\n1 * x1*x2\n1 * x1*x3\n1 * x2*x3\n-1 * x1*x2*x3\n";

} /* namespace */

TEST_CASE( "command line" )
{
  if ( !cli_path() )
  {
    MESSAGE( "PBLIN_BIN not set; CLI tests skipped" );
    return;
  }

  const auto poly_file = scratch( "example.poly" );
  write_file( poly_file, example_poly_text );
  const auto and_tt = scratch( "and.tt" );
  write_file( and_tt, "n=2\n0001\n" );

  SUBCASE( "expand prints canonical polynomial text" )
  {
    const auto r = run_cli( "expand --labs 3" );
    CHECK( r.code == 0 );
    CHECK( r.out == "n=3\n5\n-4 * x1\n-4 * x3\n8 * x1*x3\n" );

    /* canonicalization is idempotent on files */
    const auto again = run_cli( "expand " + poly_file.string() );
    CHECK( again.code == 0 );
    CHECK( again.out == example_poly_text );
  }

  SUBCASE( "expand rejects bad and oversized N with distinct codes" )
  {
    CHECK( run_cli( "expand --labs 2" ).code == 1 );
    CHECK( run_cli( "expand --labs 25" ).code == 2 );
    CHECK( run_cli( "expand" ).code == 1 );
  }

  SUBCASE( "lc over the three families on the worked example" )
  {
    const auto m = run_cli( "lc " + poly_file.string() + " --family M" );
    CHECK( m.code == 0 );
    CHECK( m.out.find( "k=4\n" ) != std::string::npos );
    CHECK( m.out.find( "verified=yes" ) != std::string::npos );

    const auto c = run_cli( "lc " + poly_file.string() + " --family C" );
    CHECK( c.code == 0 );
    CHECK( c.out.find( "k=1\n" ) != std::string::npos );
    CHECK( c.out.find( "term C I={} J={1,2,3} b=1" ) != std::string::npos );
    CHECK( c.out.find( "beta=-1" ) != std::string::npos );

    const auto b = run_cli( "lc " + poly_file.string() + " --family B" );
    CHECK( b.code == 0 );
    CHECK( b.out.find( "k=1\n" ) != std::string::npos );

    const auto csv = run_cli( "--csv lc " + poly_file.string() + " --family C" );
    CHECK( csv.out == "C,1,1,1\n" );

    CHECK( run_cli( "lc " + poly_file.string() + " --family X" ).code == 1 );
  }

  SUBCASE( "the complemented-product search on the length-3 autocorrelation objective" )
  {
    /* for N = 3 the monomial decomposition is already minimal: k = 1 */
    const auto labs3 = scratch( "labs3.poly" );
    const auto expanded = run_cli( "expand --labs 3 -o " + labs3.string() );
    REQUIRE( expanded.code == 0 );
    const auto r = run_cli( "lc " + labs3.string() + " --family C --max-degree 5" );
    CHECK( r.code == 0 );
    CHECK( r.out.find( "k=1\n" ) != std::string::npos );
    CHECK( r.out.find( "exact=yes" ) != std::string::npos );
    CHECK( r.out.find( "verified=yes" ) != std::string::npos );
  }

  SUBCASE( "affine input has complexity zero in every family" )
  {
    const auto affine_file = scratch( "affine.poly" );
    write_file( affine_file, "n=2\n3\n-2 * x2\n" );
    for ( const char* family : { "M", "C", "B" } )
    {
      const auto r = run_cli( "lc " + affine_file.string() + " --family " + family );
      CHECK( r.code == 0 );
      CHECK( r.out.find( "k=0\n" ) != std::string::npos );
    }
  }

  SUBCASE( "model sizes" )
  {
    CHECK( run_cli( "model value-indicator 10 --compat" ).out.rfind( "vars=199 cons=198", 0 ) ==
           0 );
    CHECK( run_cli( "model standard 3" ).out.rfind( "vars=4 cons=3", 0 ) == 0 );
    CHECK( run_cli( "model indicator-only 3" ).out.rfind( "vars=8 cons=40", 0 ) == 0 );

    const auto cert_file = scratch( "example.cert" );
    write_file( cert_file, "arity=3\nsize=1\nbeta=-1\na1=1\na2=1\na3=1\nterm C I={} J={1,2,3} b=1\n" );
    CHECK( run_cli( "model fortet --cert " + cert_file.string() ).out.rfind( "vars=4 cons=4", 0 ) ==
           0 );

    CHECK( run_cli( "model nogood --tt " + and_tt.string() ).out.rfind( "vars=3 cons=4", 0 ) == 0 );
  }

  SUBCASE( "no-good cap at n = 13 is a cap error" )
  {
    const auto big_tt = scratch( "big.tt" );
    std::string bits( std::size_t( 1 ) << 13, '0' );
    write_file( big_tt, "n=13\n" + bits + "\n" );
    CHECK( run_cli( "model nogood --tt " + big_tt.string() ).code == 2 );
  }

  SUBCASE( "LP files are written on request" )
  {
    const auto lp_file = scratch( "vi3.lp" );
    const auto r = run_cli( "model value-indicator 3 --write-lp " + lp_file.string() );
    CHECK( r.code == 0 );
    std::ifstream in( lp_file );
    std::string first;
    std::getline( in, first );
    CHECK( first == "\\ pblin model export" );
  }

  SUBCASE( "labs commands" )
  {
    CHECK( run_cli( "labs energy +++-" ).out == "2\n" );
    CHECK( run_cli( "labs energy ++x" ).code == 1 );

    const auto solve = run_cli( "labs solve 13" );
    CHECK( solve.code == 0 );
    CHECK( solve.out.rfind( "opt=6 ", 0 ) == 0 );
    CHECK( solve.out.find( "witness=" ) != std::string::npos );

    CHECK( run_cli( "labs solve 29" ).code == 2 );
  }

  SUBCASE( "labs table reproduces the published columns and is deterministic" )
  {
    const auto a = run_cli( "labs table 3..8" );
    CHECK( a.code == 0 );
    CHECK( a.out.rfind( "N,opt,std_vars,std_cons,std_bound,vi_vars,vi_cons,vi_bound,nodes,time_s\n",
                        0 ) == 0 );
    CHECK( a.out.find( "\n3,1," ) != std::string::npos );
    CHECK( a.out.find( "\n6,7," ) != std::string::npos );
    CHECK( a.out.find( ",17,16," ) != std::string::npos );
    CHECK( a.out.find( ",127,126," ) != std::string::npos );

    CHECK( run_cli( "labs table 3..8" ).out == a.out );
    CHECK( run_cli( "--workers 4 labs table 3..8" ).out == a.out );
  }

  SUBCASE( "separation command" )
  {
    const auto hit = run_cli( "separate --tt " + and_tt.string() + " --point 0.6,0.6 --y 0.1" );
    CHECK( hit.code == 0 );
    CHECK( hit.out.find( "violated: (1-x1) + (1-x2) + y >= 1" ) != std::string::npos );
    CHECK( hit.out.find( "violation=0.1" ) != std::string::npos );

    const auto miss = run_cli( "separate --tt " + and_tt.string() + " --point 1,1 --y 1" );
    CHECK( miss.out == "none\n" );

    CHECK( run_cli( "separate --tt " + and_tt.string() + " --point '0.6;0.6' --y 0" ).code == 1 );
    CHECK( run_cli( "separate --tt " + and_tt.string() + " --point 0.6,2.5 --y 0" ).code == 1 );
  }

  SUBCASE( "config caps lower but do not raise without --unsafe-caps" )
  {
    const auto cfg = scratch( "low.cfg" );
    write_file( cfg, "cap_labs_exhaustive=5\n" );
    CHECK( run_cli( "--config " + cfg.string() + " labs solve 6" ).code == 2 );
    CHECK( run_cli( "--config " + cfg.string() + " labs solve 5" ).code == 0 );

    const auto raise = scratch( "raise.cfg" );
    write_file( raise, "cap_labs_expand=22\n" );
    CHECK( run_cli( "--config " + raise.string() + " expand --labs 3" ).code == 1 );
    CHECK( run_cli( "--unsafe-caps --config " + raise.string() + " expand --labs 21" ).code == 0 );
  }

  SUBCASE( "bridge failures exit with their own code" )
  {
    const auto r = run_cli( "--solver-cmd '/nonexistent/solver {lp} {sol}' labs table 3..3" );
    CHECK( r.code == 3 );
  }

  SUBCASE( "usage errors exit 1" )
  {
    CHECK( run_cli( "" ).code == 1 );
    CHECK( run_cli( "frobnicate" ).code == 1 );
    CHECK( run_cli( "lc" ).code == 1 );
  }
}
