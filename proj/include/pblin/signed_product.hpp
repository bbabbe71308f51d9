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
  \file signed_product.hpp
  \brief Products of possibly complemented variables

  g(x) = prod_{i in I} x_i * prod_{j in J} (1 - x_j) with disjoint index
  sets.  J empty gives a plain monomial.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multilinear.hpp"
#include "point.hpp"

namespace pblin
{

struct signed_product
{
  std::vector<int> positive;     /* I, strictly increasing */
  std::vector<int> complemented; /* J, strictly increasing */

  signed_product() = default;

  signed_product( std::vector<int> pos, std::vector<int> comp )
      : positive( std::move( pos ) ), complemented( std::move( comp ) )
  {
    std::sort( positive.begin(), positive.end() );
    std::sort( complemented.begin(), complemented.end() );
    for ( int j : complemented )
    {
      require_input( !std::binary_search( positive.begin(), positive.end(), j ),
                     "signed product: index sets must be disjoint" );
    }
  }

  int degree() const { return static_cast<int>( positive.size() + complemented.size() ); }

  int max_index() const
  {
    int m = 0;
    if ( !positive.empty() )
    {
      m = positive.back();
    }
    if ( !complemented.empty() )
    {
      m = std::max( m, complemented.back() );
    }
    return m;
  }

  bool is_monomial() const { return complemented.empty(); }

  bool evaluate( const point_assignment& x ) const
  {
    require_input( max_index() <= x.arity(), "signed product: index out of range" );
    for ( int i : positive )
    {
      if ( !x.bit( i ) )
      {
        return false;
      }
    }
    for ( int j : complemented )
    {
      if ( x.bit( j ) )
      {
        return false;
      }
    }
    return true;
  }

  /*! \brief Multilinear expansion: sum over S subseteq J of (-1)^|S| x_{I union S}. */
  multilinear_poly to_poly( int arity ) const
  {
    require_input( max_index() <= arity, "signed product: index out of range" );
    multilinear_poly poly( arity );
    const int jn = static_cast<int>( complemented.size() );
    for ( uint64_t s = 0; s < ( uint64_t( 1 ) << jn ); ++s )
    {
      std::vector<int> indices = positive;
      for ( int b = 0; b < jn; ++b )
      {
        if ( s & ( uint64_t( 1 ) << b ) )
        {
          indices.push_back( complemented[b] );
        }
      }
      const int parity = std::popcount( s ) % 2;
      poly.add_term( term_key( std::move( indices ) ), rational( parity ? -1 : 1 ) );
    }
    return poly;
  }

  std::string str() const
  {
    auto set_str = []( const std::vector<int>& v ) {
      std::string s = "{";
      for ( std::size_t i = 0; i < v.size(); ++i )
      {
        if ( i > 0 )
        {
          s += ",";
        }
        s += std::to_string( v[i] );
      }
      return s + "}";
    };
    return "I=" + set_str( positive ) + " J=" + set_str( complemented );
  }

  friend bool operator==( const signed_product& a, const signed_product& b )
  {
    return a.positive == b.positive && a.complemented == b.complemented;
  }

  /* canonical candidate order: degree, then I, then J */
  friend bool operator<( const signed_product& a, const signed_product& b )
  {
    if ( a.degree() != b.degree() )
    {
      return a.degree() < b.degree();
    }
    if ( a.positive != b.positive )
    {
      return a.positive < b.positive;
    }
    return a.complemented < b.complemented;
  }
};

} /* namespace pblin */
