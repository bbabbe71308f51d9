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

#include <pblin/certificate.hpp>

using namespace pblin;

namespace
{

multilinear_poly example_poly()
{
  multilinear_poly f( 3 );
  f.add_term( { 1, 2 }, rational( 1 ) );
  f.add_term( { 1, 3 }, rational( 1 ) );
  f.add_term( { 2, 3 }, rational( 1 ) );
  f.add_term( { 1, 2, 3 }, rational( -1 ) );
  return f;
}

std::function<rational( const point_assignment& )> values_of( const multilinear_poly& f )
{
  return [&f]( const point_assignment& x ) { return f.evaluate( x ); };
}

} /* namespace */

TEST_CASE( "the one-complemented-product certificate of the worked example verifies" )
{
  const auto f = example_poly();

  linearization_certificate cert;
  cert.arity = 3;
  cert.linear = { rational( 1 ), rational( 1 ), rational( 1 ) };
  cert.offset = rational( -1 );
  certificate_term term;
  term.family = fn_family::product;
  term.product = signed_product( {}, { 1, 2, 3 } );
  term.weight = rational( 1 );
  cert.terms.push_back( term );

  CHECK( verify_certificate( values_of( f ), 3, cert ) );

  /* dropping the product term breaks it: f is not affine */
  linearization_certificate empty;
  empty.arity = 3;
  empty.linear.assign( 3, rational( 0 ) );
  CHECK( !verify_certificate( values_of( f ), 3, empty ) );
}

TEST_CASE( "affine functions verify with an empty term list" )
{
  multilinear_poly f( 2 );
  f.add_term( {}, rational( 4 ) );
  f.add_term( { 2 }, rational( -7 ) );

  linearization_certificate cert;
  cert.arity = 2;
  cert.linear = { rational( 0 ), rational( -7 ) };
  cert.offset = rational( 4 );
  CHECK( verify_certificate( values_of( f ), 2, cert ) );
}

TEST_CASE( "boolean terms evaluate through their tables" )
{
  /* f = x1 + 2*parity(x1,x2) */
  const auto f = []( const point_assignment& x ) {
    const int parity = ( x.bit( 1 ) ^ x.bit( 2 ) ) ? 1 : 0;
    return rational( ( x.bit( 1 ) ? 1 : 0 ) + 2 * parity );
  };
  linearization_certificate cert;
  cert.arity = 2;
  cert.linear = { rational( 1 ), rational( 0 ) };
  cert.offset = rational( 0 );
  certificate_term term;
  term.family = fn_family::boolean;
  term.table = { 0, 1, 1, 0 };
  term.weight = rational( 2 );
  cert.terms.push_back( term );
  CHECK( verify_certificate( f, 2, cert ) );

  cert.terms[0].table = { 0, 1, 1, 1 };
  CHECK( !verify_certificate( f, 2, cert ) );
}

TEST_CASE( "certificate text round trip" )
{
  linearization_certificate cert;
  cert.arity = 3;
  cert.linear = { rational( 1 ), rational( bigint( -1 ), bigint( 2 ) ), rational( 0 ) };
  cert.offset = rational( -1 );
  {
    certificate_term term;
    term.family = fn_family::product;
    term.product = signed_product( {}, { 1, 2, 3 } );
    term.weight = rational( 1 );
    cert.terms.push_back( term );
  }
  {
    certificate_term term;
    term.family = fn_family::monomial;
    term.product = signed_product( { 1, 3 }, {} );
    term.weight = rational( bigint( 2 ), bigint( 3 ) );
    cert.terms.push_back( term );
  }
  {
    certificate_term term;
    term.family = fn_family::boolean;
    term.table.assign( 8, 0 );
    term.table[5] = 1;
    term.weight = rational( -4 );
    cert.terms.push_back( term );
  }

  const auto text = certificate_to_string( cert );
  const auto parsed = certificate_from_string( text );
  CHECK( parsed.arity == cert.arity );
  CHECK( parsed.offset == cert.offset );
  CHECK( parsed.linear == cert.linear );
  REQUIRE( parsed.terms.size() == 3 );
  CHECK( parsed.terms[0].product == cert.terms[0].product );
  CHECK( parsed.terms[1].product == cert.terms[1].product );
  CHECK( parsed.terms[1].weight == cert.terms[1].weight );
  CHECK( parsed.terms[2].table == cert.terms[2].table );
  CHECK( certificate_to_string( parsed ) == text );
}

TEST_CASE( "certificate parsing rejects malformed input" )
{
  CHECK_THROWS_AS( certificate_from_string( "size=1\n" ), input_error );
  CHECK_THROWS_AS( certificate_from_string( "arity=2\nterm C I={1} J={1} b=1\n" ), input_error );
  CHECK_THROWS_AS( certificate_from_string( "arity=2\nterm C I={1,2} J={} b=0\n" ), input_error );
  CHECK_THROWS_AS( certificate_from_string( "arity=2\nterm M I={1} J={2} b=1\n" ), input_error );
  CHECK_THROWS_AS( certificate_from_string( "arity=2\nterm B tt=010 b=1\n" ), input_error );
  CHECK_THROWS_AS( certificate_from_string( "arity=2\nterm C I={3} J={} b=1\n" ), input_error );
}

TEST_CASE( "boolean functions materialize tables that agree with their evaluator" )
{
  const boolean_fn majority( 3, []( const point_assignment& x ) {
    return ( x.bit( 1 ) ? 1 : 0 ) + ( x.bit( 2 ) ? 1 : 0 ) + ( x.bit( 3 ) ? 1 : 0 ) >= 2;
  } );
  const auto& table = majority.truth_table();
  REQUIRE( table.size() == 8 );
  for ( uint64_t v = 0; v < 8; ++v )
  {
    const auto x = point_assignment::from_index( 3, v );
    CHECK( ( table[v] != 0 ) == majority( x ) );
  }

  /* text round trip */
  std::ostringstream os;
  write_truth_table( majority, os );
  std::istringstream is( os.str() );
  const auto parsed = read_truth_table( is );
  CHECK( parsed.truth_table() == table );

  /* materialization respects the cap */
  const boolean_fn wide( 25, []( const point_assignment& ) { return false; } );
  CHECK_THROWS_AS( wide.truth_table(), cap_error );

  std::istringstream bad( "n=2\n01\n" );
  CHECK_THROWS_AS( read_truth_table( bad ), input_error );
}

TEST_CASE( "monomial certificates read off the polynomial" )
{
  const auto f = example_poly();
  const auto cert = monomial_certificate( f );
  CHECK( cert.size() == 4 );
  CHECK( verify_certificate( values_of( f ), 3, cert ) );
  for ( const auto& term : cert.terms )
  {
    CHECK( term.family == fn_family::monomial );
    CHECK( term.product.is_monomial() );
  }
}
