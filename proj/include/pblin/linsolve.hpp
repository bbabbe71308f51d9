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
  \file linsolve.hpp
  \brief Exact rational elimination with backtracking support

  Both enumeration searches (partial-sum covers, family-C supports) walk a
  tree and need to add and retract constraints cheaply.  Rows pushed here are
  forward-eliminated against the stored echelon rows only, so popping the
  last push restores the previous state exactly.
*/

#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace pblin
{

struct linear_row
{
  std::vector<rational> coeffs;
  rational rhs;
};

/*! \brief Incremental consistency checker / solver for A w = b. */
class incremental_eliminator
{
public:
  explicit incremental_eliminator( int cols ) : cols_( cols ) {}

  int cols() const { return cols_; }

  /*! \brief Adds a constraint.

    Returns false iff the row is inconsistent with the rows already stored (it
    reduces to 0 = nonzero); in that case nothing is recorded and no pop is
    owed.  A row reducing to 0 = 0 is recorded as a no-op so push/pop stay
    balanced.
  */
  bool push( linear_row row )
  {
    reduce( row );
    int pivot = -1;
    for ( int c = 0; c < cols_; ++c )
    {
      if ( !row.coeffs[c].is_zero() )
      {
        pivot = c;
        break;
      }
    }
    if ( pivot < 0 )
    {
      if ( !row.rhs.is_zero() )
      {
        return false;
      }
      actions_.push_back( -1 );
      return true;
    }
    const rational lead = row.coeffs[pivot];
    for ( auto& c : row.coeffs )
    {
      c /= lead;
    }
    row.rhs /= lead;
    actions_.push_back( static_cast<int>( rows_.size() ) );
    rows_.push_back( std::move( row ) );
    pivots_.push_back( pivot );
    return true;
  }

  void pop()
  {
    assert( !actions_.empty() );
    if ( actions_.back() >= 0 )
    {
      rows_.pop_back();
      pivots_.pop_back();
    }
    actions_.pop_back();
  }

  /*! \brief One exact solution of the stored rows, free variables set to zero. */
  std::vector<rational> solve() const
  {
    std::vector<rational> x( cols_, rational( 0 ) );
    for ( auto it = rows_.rbegin(); it != rows_.rend(); ++it )
    {
      const auto row_index = static_cast<std::size_t>( rows_.rend() - it - 1 );
      const int pivot = pivots_[row_index];
      rational value = it->rhs;
      for ( int c = 0; c < cols_; ++c )
      {
        if ( c != pivot && !it->coeffs[c].is_zero() )
        {
          value -= it->coeffs[c] * x[c];
        }
      }
      x[pivot] = value;
    }
    return x;
  }

private:
  void reduce( linear_row& row ) const
  {
    for ( std::size_t r = 0; r < rows_.size(); ++r )
    {
      const int pivot = pivots_[r];
      if ( row.coeffs[pivot].is_zero() )
      {
        continue;
      }
      const rational factor = row.coeffs[pivot];
      for ( int c = 0; c < cols_; ++c )
      {
        if ( !rows_[r].coeffs[c].is_zero() )
        {
          row.coeffs[c] -= factor * rows_[r].coeffs[c];
        }
      }
      row.rhs -= factor * rows_[r].rhs;
    }
  }

  int cols_;
  std::vector<linear_row> rows_;
  std::vector<int> pivots_;
  std::vector<int> actions_; /* row index added, or -1 for a no-op push */
};

/*! \brief Solves A w = b exactly; nullopt iff inconsistent. */
inline std::optional<std::vector<rational>> solve_linear_system( const std::vector<linear_row>& rows,
                                                                 int cols )
{
  incremental_eliminator elim( cols );
  for ( const auto& row : rows )
  {
    if ( !elim.push( row ) )
    {
      return std::nullopt;
    }
  }
  return elim.solve();
}

/*! \brief Backtrackable span basis with coordinate recovery.

  Tracks, for every stored echelon row, its expression in the originally
  pushed vectors, so membership queries can report the witnessing linear
  combination.
*/
class span_basis
{
public:
  explicit span_basis( int cols ) : cols_( cols ) {}

  std::size_t size() const { return count_; }

  /*! \brief Adds a vector; returns false (and stores nothing) if dependent. */
  bool push( std::vector<rational> v )
  {
    std::vector<rational> combo( count_ + 1, rational( 0 ) );
    combo[count_] = rational( 1 );
    reduce( v, combo );
    int pivot = first_nonzero( v );
    if ( pivot < 0 )
    {
      return false;
    }
    const rational lead = v[pivot];
    for ( auto& c : v )
    {
      c /= lead;
    }
    for ( auto& c : combo )
    {
      c /= lead;
    }
    rows_.push_back( std::move( v ) );
    combos_.push_back( std::move( combo ) );
    pivots_.push_back( pivot );
    ++count_;
    return true;
  }

  void pop()
  {
    assert( count_ > 0 );
    rows_.pop_back();
    combos_.pop_back();
    pivots_.pop_back();
    --count_;
  }

  bool contains( std::vector<rational> v ) const
  {
    std::vector<rational> combo( count_, rational( 0 ) );
    reduce( v, combo );
    return first_nonzero( v ) < 0;
  }

  /*! \brief Coefficients c with v = sum_i c_i * pushed_i, or nullopt. */
  std::optional<std::vector<rational>> coordinates( std::vector<rational> v ) const
  {
    std::vector<rational> combo( count_, rational( 0 ) );
    reduce( v, combo );
    if ( first_nonzero( v ) >= 0 )
    {
      return std::nullopt;
    }
    for ( auto& c : combo )
    {
      c = -c;
    }
    return combo;
  }

private:
  int first_nonzero( const std::vector<rational>& v ) const
  {
    for ( int c = 0; c < cols_; ++c )
    {
      if ( !v[c].is_zero() )
      {
        return c;
      }
    }
    return -1;
  }

  void reduce( std::vector<rational>& v, std::vector<rational>& combo ) const
  {
    for ( std::size_t r = 0; r < count_; ++r )
    {
      const int pivot = pivots_[r];
      if ( v[pivot].is_zero() )
      {
        continue;
      }
      const rational factor = v[pivot];
      for ( int c = 0; c < cols_; ++c )
      {
        if ( !rows_[r][c].is_zero() )
        {
          v[c] -= factor * rows_[r][c];
        }
      }
      for ( std::size_t i = 0; i < combos_[r].size(); ++i )
      {
        if ( !combos_[r][i].is_zero() )
        {
          combo[i] -= factor * combos_[r][i];
        }
      }
    }
  }

  int cols_;
  std::size_t count_ = 0;
  std::vector<std::vector<rational>> rows_;
  std::vector<std::vector<rational>> combos_;
  std::vector<int> pivots_;
};

} /* namespace pblin */
