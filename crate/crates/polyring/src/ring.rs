use crate::{MonomialOrder, PolyError};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// Shared handle to a ring description. Every polynomial carries one.
pub type RingRef = Arc<RingSpec>;

/// An ordered list of variable names together with a default monomial order.
///
/// The variable order is significant: the Lê machinery reads the variables
/// as the coordinates `z_0, ..., z_n` in their declared order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl RingSpec {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<RingRef, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty()
                || !v.chars().next().unwrap().is_ascii_alphabetic() && !v.starts_with('_')
                || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || !seen.insert(v.clone())
            {
                return Err(PolyError::BadVariableName(v.clone()));
            }
        }
        Ok(Arc::new(RingSpec { vars, order }))
    }

    /// Degrevlex ring, the workbench default.
    pub fn degrevlex<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
    ) -> Result<RingRef, PolyError> {
        RingSpec::new(vars, MonomialOrder::DegRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(RingSpec {
            vars: self.vars.clone(),
            order,
        })
    }

    /// Ring with an extra variable appended at the end.
    pub fn append_var(&self, name: &str) -> Result<RingRef, PolyError> {
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        RingSpec::new(vars, self.order.clone())
    }

    /// Ring with an extra variable inserted at the front.
    pub fn prepend_var(&self, name: &str, order: MonomialOrder) -> Result<RingRef, PolyError> {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        RingSpec::new(vars, order)
    }

    /// Ring with variable `i` removed.
    pub fn remove_var(&self, i: usize) -> RingRef {
        let mut vars = self.vars.clone();
        vars.remove(i);
        Arc::new(RingSpec {
            vars,
            order: self.order.clone(),
        })
    }

    /// A variable name not already used, built from `base`.
    pub fn fresh_var(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        let mut k = 0usize;
        loop {
            let candidate = format!("{base}{k}");
            if self.var_index(&candidate).is_none() {
                return candidate;
            }
            k += 1;
        }
    }
}

/// Structural ring compatibility (same variables, same order).
pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}] ({})", self.vars.join(","), self.order)
    }
}
