use std::collections::HashSet;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::MAX_VARS;
use super::order::MonomialOrder;
use crate::error::ArithError;

/// Ordered, distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, ArithError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(ArithError::TooManyVariables {
                max: MAX_VARS,
                got: names.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(ArithError::InvalidVariable(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(ArithError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableContext { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name based on `hint` that does not clash with existing variables.
    fn fresh_name(&self, hint: &str) -> String {
        let mut name = hint.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        name
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial ring `K[x_1, ..., x_n]` together with the monomial order its
/// polynomials are sorted by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: VariableContext,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: VariableContext, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { field, vars, order })
    }

    /// Convenience constructor: DRL ring over `Z/pZ` with the given names.
    pub fn drl<S: Into<String>>(
        p: u64,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>, ArithError> {
        Ok(Self::new(
            PrimeField::new(p)?,
            VariableContext::new(names)?,
            MonomialOrder::DegRevLex,
        ))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &VariableContext {
        &self.vars
    }

    pub fn var_names(&self) -> &[String] {
        self.vars.names()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    /// Same variables and coefficients, possibly a different order.
    pub fn is_compatible(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars
    }

    /// Ring with a fresh variable (named after `hint`) inserted at `pos`.
    pub fn with_var_inserted(&self, pos: usize, hint: &str, order: MonomialOrder) -> Arc<Self> {
        assert!(pos <= self.nvars());
        assert!(self.nvars() < MAX_VARS, "no room for an auxiliary variable");
        let mut names = self.vars.names.clone();
        names.insert(pos, self.vars.fresh_name(hint));
        Arc::new(PolyRing {
            field: self.field,
            vars: VariableContext { names },
            order,
        })
    }

    /// Ring with the variable at `pos` dropped.
    pub fn with_var_removed(&self, pos: usize, order: MonomialOrder) -> Arc<Self> {
        let mut names = self.vars.names.clone();
        names.remove(pos);
        Arc::new(PolyRing {
            field: self.field,
            vars: VariableContext { names },
            order,
        })
    }
}

/// Pointer equality first, structural equality as fallback.
#[inline]
pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
