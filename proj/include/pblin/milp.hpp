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
  \file milp.hpp
  \brief Solver-agnostic mixed-integer linear models

  A model is an ordered list of variable definitions, an ordered list of
  constraint rows, and a minimization objective with an exact constant
  offset.  Completed models are immutable value types; builders construct
  them deterministically so exports are byte-stable.
*/

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pblin
{

enum class var_kind
{
  continuous,
  binary,
  integer
};

struct var_def
{
  std::string name;
  rational lower;
  rational upper;
  var_kind kind = var_kind::continuous;
};

enum class row_sense
{
  le,
  ge,
  eq
};

inline const char* sense_str( row_sense s )
{
  switch ( s )
  {
  case row_sense::le:
    return "<=";
  case row_sense::ge:
    return ">=";
  default:
    return "=";
  }
}

struct lin_term
{
  int var; /* index into the model's variable list */
  rational coeff;
};

struct lin_constraint
{
  std::string name;
  std::vector<lin_term> terms; /* sorted by variable index, no duplicates */
  row_sense sense = row_sense::le;
  rational rhs;
};

struct model_stats_t
{
  int vars = 0;
  int cons = 0;
  long long nonzeros = 0; /* objective plus constraint coefficients */
};

class milp_model
{
public:
  int add_var( var_def def )
  {
    require_input( !def.name.empty(), "model: empty variable name" );
    require_input( index_.find( def.name ) == index_.end(),
                   "model: duplicate variable name '" + def.name + "'" );
    require_input( !( def.upper < def.lower ), "model: lower bound above upper bound" );
    if ( def.kind == var_kind::binary )
    {
      require_input( def.lower == rational( 0 ) && def.upper == rational( 1 ),
                     "model: binary variables have bounds [0,1]" );
    }
    const int idx = static_cast<int>( vars_.size() );
    index_.emplace( def.name, idx );
    vars_.push_back( std::move( def ) );
    return idx;
  }

  int add_binary( std::string name )
  {
    return add_var( { std::move( name ), rational( 0 ), rational( 1 ), var_kind::binary } );
  }

  int add_continuous( std::string name, rational lower, rational upper )
  {
    return add_var( { std::move( name ), std::move( lower ), std::move( upper ),
                      var_kind::continuous } );
  }

  void add_constraint( std::string name, std::vector<lin_term> terms, row_sense sense,
                       rational rhs )
  {
    for ( const auto& t : terms )
    {
      require_input( t.var >= 0 && t.var < static_cast<int>( vars_.size() ),
                     "model: constraint references undeclared variable" );
    }
    std::sort( terms.begin(), terms.end(),
               []( const lin_term& a, const lin_term& b ) { return a.var < b.var; } );
    for ( std::size_t i = 1; i < terms.size(); ++i )
    {
      require_input( terms[i - 1].var != terms[i].var,
                     "model: duplicate variable in constraint '" + name + "'" );
    }
    std::erase_if( terms, []( const lin_term& t ) { return t.coeff.is_zero(); } );
    cons_.push_back( { std::move( name ), std::move( terms ), sense, std::move( rhs ) } );
  }

  void set_objective_term( int var, rational coeff )
  {
    require_input( var >= 0 && var < static_cast<int>( vars_.size() ),
                   "model: objective references undeclared variable" );
    if ( coeff.is_zero() )
    {
      return;
    }
    objective_.push_back( { var, std::move( coeff ) } );
    std::sort( objective_.begin(), objective_.end(),
               []( const lin_term& a, const lin_term& b ) { return a.var < b.var; } );
  }

  void add_objective_offset( rational c ) { offset_ += c; }

  const std::vector<var_def>& vars() const { return vars_; }
  const std::vector<lin_constraint>& constraints() const { return cons_; }
  const std::vector<lin_term>& objective() const { return objective_; }
  const rational& objective_offset() const { return offset_; }

  int var_index( const std::string& name ) const
  {
    const auto it = index_.find( name );
    require_input( it != index_.end(), "model: unknown variable '" + name + "'" );
    return it->second;
  }

  bool has_var( const std::string& name ) const { return index_.count( name ) != 0; }

  model_stats_t stats() const
  {
    model_stats_t s;
    s.vars = static_cast<int>( vars_.size() );
    s.cons = static_cast<int>( cons_.size() );
    s.nonzeros = static_cast<long long>( objective_.size() );
    for ( const auto& c : cons_ )
    {
      s.nonzeros += static_cast<long long>( c.terms.size() );
    }
    return s;
  }

private:
  std::vector<var_def> vars_;
  std::unordered_map<std::string, int> index_;
  std::vector<lin_constraint> cons_;
  std::vector<lin_term> objective_;
  rational offset_;
};

/*! \brief Exact objective value of an assignment (offset included). */
inline rational model_objective_value( const milp_model& model, const std::vector<rational>& x )
{
  rational value = model.objective_offset();
  for ( const auto& t : model.objective() )
  {
    value += t.coeff * x[t.var];
  }
  return value;
}

/*! \brief Whether the assignment satisfies a row, exactly. */
inline bool row_satisfied( const lin_constraint& row, const std::vector<rational>& x )
{
  rational lhs( 0 );
  for ( const auto& t : row.terms )
  {
    lhs += t.coeff * x[t.var];
  }
  switch ( row.sense )
  {
  case row_sense::le:
    return lhs <= row.rhs;
  case row_sense::ge:
    return lhs >= row.rhs;
  default:
    return lhs == row.rhs;
  }
}

} /* namespace pblin */
