use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared handle to a variable context.
pub type Ctx = Arc<VariableContext>;

/// Ordered variable names with optional gradings.
///
/// Declaration order is significant: it fixes the lexicographic monomial
/// order used for canonical printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    weights: Option<Vec<u32>>,
    eigensigns: Option<Vec<i8>>,
    bidegrees: Option<Vec<(i32, i32)>>,
}

impl VariableContext {
    /// A context without any grading.
    pub fn ungraded<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_unique(&names)?;
        Ok(Arc::new(Self {
            names,
            weights: None,
            eigensigns: None,
            bidegrees: None,
        }))
    }

    /// A weighted context; every weight must be positive.
    pub fn graded<S: AsRef<str>>(vars: &[(S, u32)]) -> Result<Ctx> {
        let names: Vec<String> = vars.iter().map(|(s, _)| s.as_ref().to_string()).collect();
        check_unique(&names)?;
        let weights: Vec<u32> = vars.iter().map(|(_, w)| *w).collect();
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Contract(format!(
                "variable `{}` has weight 0",
                names[pos]
            )));
        }
        Ok(Arc::new(Self {
            names,
            weights: Some(weights),
            eigensigns: None,
            bidegrees: None,
        }))
    }

    /// Copy of this context with a bidegree attached to every variable.
    pub fn with_bidegrees(&self, bidegrees: &[(i32, i32)]) -> Result<Ctx> {
        if bidegrees.len() != self.names.len() {
            return Err(Error::Contract(format!(
                "expected {} bidegrees, got {}",
                self.names.len(),
                bidegrees.len()
            )));
        }
        let mut ctx = self.clone();
        ctx.bidegrees = Some(bidegrees.to_vec());
        Ok(Arc::new(ctx))
    }

    /// Copy of this context with a +1/-1 eigensign attached to every variable.
    pub fn with_eigensigns(&self, signs: &[i8]) -> Result<Ctx> {
        if signs.len() != self.names.len() || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Contract(
                "eigensigns must be +1 or -1, one per variable".into(),
            ));
        }
        let mut ctx = self.clone();
        ctx.eigensigns = Some(signs.to_vec());
        Ok(Arc::new(ctx))
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

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, idx: usize) -> Option<u32> {
        self.weights.as_ref().map(|w| w[idx])
    }

    pub fn eigensigns(&self) -> Option<&[i8]> {
        self.eigensigns.as_deref()
    }

    pub fn bidegrees(&self) -> Option<&[(i32, i32)]> {
        self.bidegrees.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.weights.is_some()
    }
}

fn check_unique(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(Error::Contract("empty variable name".into()));
        }
        if names[..i].contains(n) {
            return Err(Error::Contract(format!("duplicate variable `{n}`")));
        }
    }
    Ok(())
}

/// True when two handles denote the same context, by pointer or by value.
pub fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_weights() {
        assert!(VariableContext::ungraded(&["x", "x"]).is_err());
        assert!(VariableContext::graded(&[("x", 1), ("y", 0)]).is_err());
    }

    #[test]
    fn lookup() {
        let ctx = VariableContext::graded(&[("y1", 2), ("z1", 3)]).unwrap();
        assert_eq!(ctx.index_of("z1").unwrap(), 1);
        assert_eq!(ctx.weight(1), Some(3));
        assert!(matches!(ctx.index_of("t"), Err(Error::UnknownVariable(_))));
    }
}
