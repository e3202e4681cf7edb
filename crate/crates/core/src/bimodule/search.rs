//! Exhaustive enumeration of small algebraic structures.

use super::{Bimodule, BimoduleMap, CalcError, CalcResult, Calculus, Monoid};
use crate::kernel::{Mor, Obj};

/// Largest hom-set the enumerators will materialize.
pub const SEARCH_CAP: u64 = 1 << 16;

impl Calculus {
    fn bounded_hom(&self, x: &Obj, y: &Obj, cap: u64) -> CalcResult<Vec<Mor>> {
        let n = self.c.hom_size(x, y);
        if n > cap {
            return Err(CalcError::BudgetExceeded(format!("{n} morphisms {x} -> {y}")));
        }
        Ok(self.c.hom(x, y))
    }

    /// Every monoid structure on `x`.
    pub fn enumerate_monoids(&self, x: &Obj, cap: u64) -> CalcResult<Vec<Monoid>> {
        let c = &self.c;
        let xx = self.t(x, x);
        let units = self.bounded_hom(&c.unit(), x, cap)?;
        let mults = self.bounded_hom(&xx, x, cap)?;
        let mut out = Vec::new();
        for e in &units {
            let le = c.rwhisker(e, x);
            let re = c.lwhisker(x, e);
            let (lam, rho) = (c.lambda(x), c.rho(x));
            for m in &mults {
                if c.raw().compose(&le, m) != lam || c.raw().compose(&re, m) != rho {
                    continue;
                }
                let a = Monoid { carrier: x.clone(), mult: m.clone(), unit: e.clone() };
                if self.validate_monoid(&a)?.passed() {
                    out.push(a);
                }
            }
        }
        Ok(out)
    }

    /// Left actions of `a` on `x`, pruned by unitality before associativity.
    pub fn enumerate_left_actions(&self, a: &Monoid, x: &Obj, cap: u64) -> CalcResult<Vec<Mor>> {
        let c = &self.c;
        let ac = &a.carrier;
        let unit_side = c.rwhisker(&a.unit, x);
        let lam = c.lambda(x);
        let assoc = c.alpha(ac, ac, x);
        let mx = c.rwhisker(&a.mult, x);
        let mut out = Vec::new();
        for l in self.bounded_hom(&self.t(ac, x), x, cap)? {
            if c.raw().compose(&unit_side, &l) != lam {
                continue;
            }
            let lhs = c.raw().compose(&mx, &l);
            let rhs = c.chain(&[&assoc, &c.lwhisker(ac, &l), &l])?;
            if lhs == rhs {
                out.push(l);
            }
        }
        Ok(out)
    }

    pub fn enumerate_right_actions(&self, b: &Monoid, x: &Obj, cap: u64) -> CalcResult<Vec<Mor>> {
        let c = &self.c;
        let bc = &b.carrier;
        let unit_side = c.lwhisker(x, &b.unit);
        let rho = c.rho(x);
        let assoc = c.alpha(x, bc, bc);
        let xm = c.lwhisker(x, &b.mult);
        let mut out = Vec::new();
        for r in self.bounded_hom(&self.t(x, bc), x, cap)? {
            if c.raw().compose(&unit_side, &r) != rho {
                continue;
            }
            let lhs = c.raw().compose(&c.rwhisker(&r, bc), &r);
            let rhs = c.chain(&[&assoc, &xm, &r])?;
            if lhs == rhs {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Every (a,b)-bimodule structure on `x`.
    pub fn enumerate_bimodules(&self, a: &Monoid, b: &Monoid, x: &Obj, cap: u64) -> CalcResult<Vec<Bimodule>> {
        let c = &self.c;
        let lefts = self.enumerate_left_actions(a, x, cap)?;
        if lefts.is_empty() {
            return Ok(Vec::new());
        }
        let rights = self.enumerate_right_actions(b, x, cap)?;
        let assoc = c.alpha(&a.carrier, x, &b.carrier);
        let mut out = Vec::new();
        for l in &lefts {
            let lb = c.rwhisker(l, &b.carrier);
            for r in &rights {
                let lhs = c.raw().compose(&lb, r);
                let rhs = c.chain(&[&assoc, &c.lwhisker(&a.carrier, r), l])?;
                if lhs == rhs {
                    out.push(Bimodule { left: a.clone(), right: b.clone(), carrier: x.clone(), lact: l.clone(), ract: r.clone() });
                }
            }
        }
        Ok(out)
    }

    pub fn is_equivariant(&self, s: &Bimodule, t: &Bimodule, f: &Mor) -> bool {
        let c = &self.c;
        let raw = c.raw();
        raw.compose(&c.lwhisker(&s.left.carrier, f), &t.lact) == raw.compose(&s.lact, f)
            && raw.compose(&c.rwhisker(f, &s.right.carrier), &t.ract) == raw.compose(&s.ract, f)
    }

    /// Every bimodule map `s → t`.
    pub fn enumerate_maps(&self, s: &Bimodule, t: &Bimodule, cap: u64) -> CalcResult<Vec<BimoduleMap>> {
        if s.left != t.left || s.right != t.right {
            return Err(CalcError::MonoidMismatch("maps between bimodules over different monoids".into()));
        }
        Ok(self
            .bounded_hom(&s.carrier, &t.carrier, cap)?
            .into_iter()
            .filter(|f| self.is_equivariant(s, t, f))
            .map(|f| BimoduleMap { src: s.clone(), dst: t.clone(), map: f })
            .collect())
    }

    pub fn find_bimodule_iso(&self, s: &Bimodule, t: &Bimodule, cap: u64) -> CalcResult<Option<BimoduleMap>> {
        if s.left != t.left || s.right != t.right || self.c.size(&s.carrier) != self.c.size(&t.carrier) {
            return Ok(None);
        }
        for f in self.bounded_hom(&s.carrier, &t.carrier, cap)? {
            if self.c.is_iso(&f) && self.is_equivariant(s, t, &f) {
                return Ok(Some(BimoduleMap { src: s.clone(), dst: t.clone(), map: f }));
            }
        }
        Ok(None)
    }

    /// Searches (B,A)-bimodules by increasing carrier size for an inverse
    /// of `m`. Carriers whose action spaces exceed [`SEARCH_CAP`] are
    /// skipped, so `NotFound` only covers the carriers actually searched.
    pub fn find_equivalence_witness(&self, m: &Bimodule, budget: usize) -> CalcResult<super::EquivalenceWitness> {
        let (a, b) = (&m.left, &m.right);
        let id_a = self.identity_bimodule(a);
        let id_b = self.identity_bimodule(b);
        let mut carriers = self.c.objects(budget);
        carriers.sort_by_key(|x| self.c.size(x));
        for x in carriers {
            let candidates = match self.enumerate_bimodules(b, a, &x, SEARCH_CAP) {
                Ok(v) => v,
                Err(CalcError::BudgetExceeded(_)) => continue,
                Err(e) => return Err(e),
            };
            for back in candidates {
                let t = self.balanced_tensor_uncached(m, &back)?;
                if self.c.size(&t.result.carrier) != self.c.size(&a.carrier) {
                    continue;
                }
                let Some(eta) = self.find_bimodule_iso(&t.result, &id_a, SEARCH_CAP).ok().flatten() else { continue };
                let s = self.balanced_tensor_uncached(&back, m)?;
                let Some(eps) = self.find_bimodule_iso(&s.result, &id_b, SEARCH_CAP).ok().flatten() else { continue };
                return Ok(super::EquivalenceWitness { forward: m.clone(), backward: back, eta, eps });
            }
        }
        Err(CalcError::NotFound(budget))
    }
}
