//! Constructions on equivalence witnesses.

use super::{BimoduleMap, CalcResult, Calculus, EquivalenceWitness};
use crate::report::Report;

impl Calculus {
    pub fn validate_witness(&self, w: &EquivalenceWitness) -> CalcResult<Report> {
        let mut r = Report::new();
        let (m, mp) = (&w.forward, &w.backward);
        r.extend("forward", self.validate_bimodule(m)?);
        r.extend("backward", self.validate_bimodule(mp)?);
        let shapes = m.left == mp.right && m.right == mp.left;
        if !r.holds("opposite monoids", shapes, "backward bimodule is not over the swapped monoids") {
            return Ok(r);
        }
        let mm = self.balanced_tensor(m, mp)?.result;
        let pm = self.balanced_tensor(mp, m)?.result;
        r.holds("eta source", w.eta.src == mm, "eta does not start at M ⊗ M'");
        r.holds("eta target", w.eta.dst == self.identity_bimodule(&m.left), "eta does not end at the left monoid");
        r.holds("eps source", w.eps.src == pm, "eps does not start at M' ⊗ M");
        r.holds("eps target", w.eps.dst == self.identity_bimodule(&m.right), "eps does not end at the right monoid");
        r.extend("eta", self.validate_bimodule_map(&w.eta)?);
        r.extend("eps", self.validate_bimodule_map(&w.eps)?);
        r.holds("eta invertible", self.is_iso_map(&w.eta), "eta is not an isomorphism");
        r.holds("eps invertible", self.is_iso_map(&w.eps), "eps is not an isomorphism");
        Ok(r)
    }

    /// The identity bimodule is its own inverse through the left unitor.
    pub fn identity_witness(&self, a: &super::Monoid) -> CalcResult<EquivalenceWitness> {
        let id = self.identity_bimodule(a);
        let u = self.unit_left(&id)?;
        Ok(EquivalenceWitness { forward: id.clone(), backward: id, eta: u.clone(), eps: u })
    }

    pub fn invert_witness(&self, w: &EquivalenceWitness) -> EquivalenceWitness {
        EquivalenceWitness { forward: w.backward.clone(), backward: w.forward.clone(), eta: w.eps.clone(), eps: w.eta.clone() }
    }

    /// A witness for `M ⊗_B N` with inverse `N' ⊗_B M'`.
    pub fn compose_witness(&self, wm: &EquivalenceWitness, wn: &EquivalenceWitness) -> CalcResult<EquivalenceWitness> {
        let (m, mp, n, np) = (&wm.forward, &wm.backward, &wn.forward, &wn.backward);
        let fwd = self.balanced_tensor(m, n)?.result;
        let bwd = self.balanced_tensor(np, mp)?.result;

        let eta = self.chain_maps(&[
            &self.assoc(m, n, &bwd)?,
            &self.lwhisker_map(m, &self.assoc_inv(n, np, mp)?)?,
            &self.lwhisker_map(m, &self.rwhisker_map(&wn.eta, mp)?)?,
            &self.lwhisker_map(m, &self.unit_left(mp)?)?,
            &wm.eta,
        ])?;
        let eps = self.chain_maps(&[
            &self.assoc(np, mp, &fwd)?,
            &self.lwhisker_map(np, &self.assoc_inv(mp, m, n)?)?,
            &self.lwhisker_map(np, &self.rwhisker_map(&wm.eps, n)?)?,
            &self.lwhisker_map(np, &self.unit_left(n)?)?,
            &wn.eps,
        ])?;
        Ok(EquivalenceWitness { forward: fwd, backward: bwd, eta, eps })
    }

    /// Moves a witness for `M` along a bimodule isomorphism `θ: M → T`.
    pub fn transfer_witness(&self, w: &EquivalenceWitness, theta: &BimoduleMap) -> CalcResult<EquivalenceWitness> {
        let inv = self.inverse_map(theta)?;
        let mp = &w.backward;
        let eta = self.compose_maps(&self.rwhisker_map(&inv, mp)?, &w.eta)?;
        let eps = self.compose_maps(&self.lwhisker_map(mp, &inv)?, &w.eps)?;
        Ok(EquivalenceWitness { forward: theta.dst.clone(), backward: mp.clone(), eta, eps })
    }

    /// Replaces the inverse `M'` by an isomorphic `T'` along `θ: M' → T'`.
    pub fn transfer_witness_backward(&self, w: &EquivalenceWitness, theta: &BimoduleMap) -> CalcResult<EquivalenceWitness> {
        let flipped = self.transfer_witness(&self.invert_witness(w), theta)?;
        Ok(self.invert_witness(&flipped))
    }
}
