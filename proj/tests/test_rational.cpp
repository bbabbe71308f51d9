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

#include <random>

#include <pblin/rational.hpp>

using pblin::rational;

TEST_CASE( "rationals are stored in lowest terms with positive denominator" )
{
  CHECK( rational( pblin::bigint( 6 ), pblin::bigint( 4 ) ) == rational( pblin::bigint( 3 ), pblin::bigint( 2 ) ) );
  CHECK( rational( pblin::bigint( 1 ), pblin::bigint( -2 ) ).str() == "-1/2" );
  CHECK( rational( pblin::bigint( 0 ), pblin::bigint( -7 ) ).str() == "0" );
  CHECK( rational( pblin::bigint( -4 ), pblin::bigint( -6 ) ).str() == "2/3" );
  CHECK( rational( 5 ).is_integer() );
  CHECK( rational( pblin::bigint( 1 ), pblin::bigint( 3 ) ).den() == 3 );
}

TEST_CASE( "parse and print round trip" )
{
  for ( const char* text : { "0", "17", "-23", "2/3", "-7/20", "1000000000000000000000/7" } )
  {
    CHECK( rational::parse( text ).str() == text );
  }
  CHECK( rational::parse( "4/6" ).str() == "2/3" );
  CHECK_THROWS_AS( rational::parse( "1/0" ), pblin::input_error );
  CHECK_THROWS_AS( rational::parse( "abc" ), pblin::input_error );
  CHECK_THROWS_AS( rational( 1 ) / rational( 0 ), pblin::input_error );
}

TEST_CASE( "field arithmetic agrees with 64-bit cross-checks" )
{
  std::mt19937 rng( 12345 );
  std::uniform_int_distribution<long long> num( -1000, 1000 );
  std::uniform_int_distribution<long long> den( 1, 60 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    const long long an = num( rng ), ad = den( rng );
    const long long bn = num( rng ), bd = den( rng );
    const rational a{ pblin::bigint( an ), pblin::bigint( ad ) };
    const rational b{ pblin::bigint( bn ), pblin::bigint( bd ) };

    CHECK( a + b == rational( pblin::bigint( an * bd + bn * ad ), pblin::bigint( ad * bd ) ) );
    CHECK( a - b == rational( pblin::bigint( an * bd - bn * ad ), pblin::bigint( ad * bd ) ) );
    CHECK( a * b == rational( pblin::bigint( an * bn ), pblin::bigint( ad * bd ) ) );
    if ( bn != 0 )
    {
      CHECK( a / b == rational( pblin::bigint( an * bd ), pblin::bigint( ad * bn ) ) );
    }
    CHECK( ( a < b ) == ( an * bd < bn * ad ) );
    CHECK( a + b - b == a );
  }
}

TEST_CASE( "ordering is exact" )
{
  const rational third( pblin::bigint( 1 ), pblin::bigint( 3 ) );
  const rational close( pblin::bigint( 33333333333333333LL ), pblin::bigint( 100000000000000000LL ) );
  CHECK( close < third );
  CHECK( third > close );
  CHECK( third.abs() == third );
  CHECK( ( -third ).abs() == third );
  CHECK( ( -third ).sign() == -1 );
}
