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
  \file rational.hpp
  \brief Exact rational scalar on top of an arbitrary-precision integer

  Every scalar in the library is one of these; no operation anywhere in the
  core may round.  Values are kept in lowest terms with a positive
  denominator, so equality is plain field comparison.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pblin
{

using bigint = boost::multiprecision::cpp_int;

class rational
{
public:
  rational() = default;

  rational( long long value ) : num_( value ) {}

  rational( bigint numerator, bigint denominator = 1 )
      : num_( std::move( numerator ) ), den_( std::move( denominator ) )
  {
    require_input( den_ != 0, "rational: zero denominator" );
    normalize();
  }

  const bigint& num() const { return num_; }
  const bigint& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : ( num_ < 0 ? -1 : 1 ); }

  rational operator-() const
  {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  rational& operator+=( const rational& o )
  {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  rational& operator-=( const rational& o )
  {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  rational& operator*=( const rational& o )
  {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  rational& operator/=( const rational& o )
  {
    require_input( o.num_ != 0, "rational: division by zero" );
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend rational operator+( rational a, const rational& b ) { return a += b; }
  friend rational operator-( rational a, const rational& b ) { return a -= b; }
  friend rational operator*( rational a, const rational& b ) { return a *= b; }
  friend rational operator/( rational a, const rational& b ) { return a /= b; }

  friend bool operator==( const rational& a, const rational& b )
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend bool operator!=( const rational& a, const rational& b ) { return !( a == b ); }

  friend bool operator<( const rational& a, const rational& b )
  {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  friend bool operator>( const rational& a, const rational& b ) { return b < a; }
  friend bool operator<=( const rational& a, const rational& b ) { return !( b < a ); }
  friend bool operator>=( const rational& a, const rational& b ) { return !( a < b ); }

  rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const
  {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  /*! \brief Renders as `p/q`, or just `p` for integers. */
  std::string str() const
  {
    std::string s = num_.str();
    if ( den_ != 1 )
    {
      s += "/" + den_.str();
    }
    return s;
  }

  /*! \brief Parses `p`, `-p`, or `p/q` with an optional leading sign. */
  static rational parse( std::string_view text )
  {
    const auto slash = text.find( '/' );
    try
    {
      if ( slash == std::string_view::npos )
      {
        return rational( bigint( std::string( text ) ) );
      }
      bigint num( std::string( text.substr( 0, slash ) ) );
      bigint den( std::string( text.substr( slash + 1 ) ) );
      return rational( std::move( num ), std::move( den ) );
    }
    catch ( const std::runtime_error& )
    {
      throw input_error( "rational: cannot parse '" + std::string( text ) + "'" );
    }
  }

private:
  void normalize()
  {
    if ( num_ == 0 )
    {
      den_ = 1;
      return;
    }
    if ( den_ < 0 )
    {
      num_ = -num_;
      den_ = -den_;
    }
    bigint g = boost::multiprecision::gcd( num_ < 0 ? bigint( -num_ ) : num_, den_ );
    if ( g != 1 )
    {
      num_ /= g;
      den_ /= g;
    }
  }

  bigint num_ = 0;
  bigint den_ = 1;
};

inline std::ostream& operator<<( std::ostream& os, const rational& r )
{
  return os << r.str();
}

} /* namespace pblin */
