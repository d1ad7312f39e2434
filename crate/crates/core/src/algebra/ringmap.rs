//! Ring homomorphisms given by the images of source variables.

use std::collections::HashMap;
use std::fmt;

use super::context::{same_context, Ctx};
use super::parse::parse_poly;
use super::poly::{Homogeneity, MultiPoly};
use crate::error::{Error, Result};

/// A map `k[source] -> k[target]` determined by one image per source variable.
#[derive(Clone)]
pub struct RingMap {
    source: Ctx,
    target: Ctx,
    images: Vec<MultiPoly>,
}

impl RingMap {
    /// Builds a map. When both contexts are graded, each image must be
    /// homogeneous of the weight of its source variable (or zero).
    pub fn new(source: &Ctx, target: &Ctx, images: Vec<MultiPoly>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Contract(format!(
                "{} images for {} source variables",
                images.len(),
                source.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !same_context(img.ctx(), target) {
                return Err(Error::ContextMismatch(format!(
                    "image of `{}` is not over the target context",
                    source.name(i)
                )));
            }
            if let (Some(w), true) = (source.weight(i), target.is_graded()) {
                match img.homogeneity()? {
                    Homogeneity::Zero => {}
                    Homogeneity::Homogeneous(d) if d == w as i64 => {}
                    other => {
                        return Err(Error::Contract(format!(
                            "image of `{}` (weight {w}) is not homogeneous of that weight: {other:?}",
                            source.name(i)
                        )))
                    }
                }
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Builds a map from `(variable, image text)` pairs. Source variables not
    /// listed go to the target variable of the same name.
    pub fn from_text(source: &Ctx, target: &Ctx, assignments: &[(&str, &str)]) -> Result<Self> {
        let mut images: Vec<Option<MultiPoly>> = vec![None; source.len()];
        for (name, text) in assignments {
            let idx = source.index_of(name)?;
            images[idx] = Some(parse_poly(text, target)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(p) => Ok(p),
                None => MultiPoly::var(target, source.name(i)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    /// Builds a map from polynomial images keyed by variable name, with the
    /// same default as [`RingMap::from_text`].
    pub fn from_pairs(source: &Ctx, target: &Ctx, assignments: Vec<(&str, MultiPoly)>) -> Result<Self> {
        let mut images: Vec<Option<MultiPoly>> = vec![None; source.len()];
        for (name, p) in assignments {
            images[source.index_of(name)?] = Some(p);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(p) => Ok(p),
                None => MultiPoly::var(target, source.name(i)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(ctx: &Ctx) -> Self {
        Self {
            source: ctx.clone(),
            target: ctx.clone(),
            images: (0..ctx.len()).map(|i| MultiPoly::var_at(ctx, i)).collect(),
        }
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    pub fn image(&self, name: &str) -> Result<&MultiPoly> {
        Ok(&self.images[self.source.index_of(name)?])
    }

    /// Applies the map to a polynomial over the source context.
    pub fn substitute(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if !same_context(p.ctx(), &self.source) {
            return Err(Error::ContextMismatch(format!(
                "substitute: polynomial over [{}], map source [{}]",
                p.ctx().names().join(","),
                self.source.names().join(",")
            )));
        }
        let mut powers: HashMap<(usize, u16), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut term = MultiPoly::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| self.images[i].pow(e as u32));
                term = &term * &*pw;
                if term.is_zero() {
                    break;
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &RingMap) -> Result<RingMap> {
        if !same_context(&inner.target, &self.source) {
            return Err(Error::ContextMismatch(
                "compose: inner target differs from outer source".into(),
            ));
        }
        let images = inner
            .images
            .iter()
            .map(|p| self.substitute(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(RingMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// True when every image is zero or equal to the corresponding target
    /// variable (only meaningful when source and target coincide).
    pub fn is_identity(&self) -> bool {
        same_context(&self.source, &self.target)
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, p)| *p == MultiPoly::var_at(&self.target, i))
    }

}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} -> {}", self.source.name(i), img)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMap(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.source.name(i), img)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::VariableContext;

    #[test]
    fn veronese_relation_vanishes() {
        let src = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2)]).unwrap();
        let tgt = VariableContext::graded(&[("s1", 1), ("s2", 1)]).unwrap();
        let map = RingMap::from_text(&src, &tgt, &[("y1", "s1^2"), ("y2", "s1*s2"), ("y3", "s2^2")]).unwrap();
        let rel = parse_poly("y1*y3 - y2^2", &src).unwrap();
        assert!(map.substitute(&rel).unwrap().is_zero());
    }

    #[test]
    fn rejects_wrong_weight() {
        let src = VariableContext::graded(&[("y", 2)]).unwrap();
        let tgt = VariableContext::graded(&[("s", 1)]).unwrap();
        assert!(RingMap::from_text(&src, &tgt, &[("y", "s^3")]).is_err());
        assert!(RingMap::from_text(&src, &tgt, &[("y", "0")]).is_ok());
    }

    #[test]
    fn composition_matches_sequential_substitution() {
        let a = VariableContext::ungraded(&["x", "y"]).unwrap();
        let b = VariableContext::ungraded(&["p", "q"]).unwrap();
        let c = VariableContext::ungraded(&["t"]).unwrap();
        let f = RingMap::from_text(&a, &b, &[("x", "p + q"), ("y", "p*q")]).unwrap();
        let g = RingMap::from_text(&b, &c, &[("p", "t^2"), ("q", "1 - t")]).unwrap();
        let h = g.compose(&f).unwrap();
        let poly = parse_poly("x^2 - 3*y + 1", &a).unwrap();
        assert_eq!(
            h.substitute(&poly).unwrap(),
            g.substitute(&f.substitute(&poly).unwrap()).unwrap()
        );
        assert!(f.substitute(&MultiPoly::var(&c, "t").unwrap()).is_err());
    }

    #[test]
    fn identity_map() {
        let a = VariableContext::ungraded(&["x", "y"]).unwrap();
        assert!(RingMap::identity(&a).is_identity());
    }
}
