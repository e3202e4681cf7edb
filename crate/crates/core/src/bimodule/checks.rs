//! Diagram checks for the balanced tensor calculus. Every check compares
//! morphisms for exact equality and records the two composites on failure.

use super::{Bimodule, BimoduleMap, CalcError, CalcResult, Calculus, MixedKind};
use crate::kernel::Mor;
use crate::report::Report;

type Pair = CalcResult<(Mor, Mor)>;

impl Calculus {
    /// Replaces the balanced tensor at joint `i` (between factors `i` and
    /// `i + 1`) by the ordinary tensor whenever bit `i` of `mask` is set.
    pub fn restrict_chain(&self, ms: &[Bimodule], mask: u32) -> Vec<Bimodule> {
        let mut out = ms.to_vec();
        for i in 0..ms.len().saturating_sub(1) {
            if mask & (1 << i) != 0 {
                out[i] = self.forget_right(&out[i]);
                out[i + 1] = self.forget_left(&out[i + 1]);
            }
        }
        out
    }

    pub fn restrict_map_chain(&self, fs: &[BimoduleMap], mask: u32) -> Vec<BimoduleMap> {
        let mut out = fs.to_vec();
        for i in 0..fs.len().saturating_sub(1) {
            if mask & (1 << i) != 0 {
                out[i] = self.forget_right_map(&out[i]);
                out[i + 1] = self.forget_left_map(&out[i + 1]);
            }
        }
        out
    }

    /// The coequalizer square `π • (φ ⊗_B ψ) = (φ ⊗ ψ) • π'`, functoriality
    /// on the composable pairs `(f, f2)`, `(g, g2)` and preservation of
    /// identities.
    pub fn check_tensor_functorial(&self, f: &BimoduleMap, f2: &BimoduleMap, g: &BimoduleMap, g2: &BimoduleMap) -> CalcResult<Report> {
        let c = &self.c;
        let mut r = Report::new();
        let fg = self.tensor_of_maps(f, g)?;
        r.extend("induced map", self.validate_bimodule_map(&fg)?);
        let s = self.balanced_tensor(&f.src, &g.src)?;
        let d = self.balanced_tensor(&f.dst, &g.dst)?;
        r.eq_result(
            "projection square",
            (|| -> Pair { Ok((c.compose(&s.projection, &fg.map)?, c.compose(&c.tensor_mor(&f.map, &g.map), &d.projection)?)) })(),
        );
        r.eq_result(
            "composition",
            (|| -> Pair {
                let lhs = self.compose_maps(&fg, &self.tensor_of_maps(f2, g2)?)?;
                let rhs = self.tensor_of_maps(&self.compose_maps(f, f2)?, &self.compose_maps(g, g2)?)?;
                Ok((lhs.map, rhs.map))
            })(),
        );
        r.eq_result(
            "identities",
            (|| -> Pair { Ok((self.tensor_of_maps(&self.id_map(&f.src), &self.id_map(&g.src))?.map, c.id(&s.result.carrier))) })(),
        );
        Ok(r)
    }

    /// Structure of `M ⊗_B N`: the projection coequalizes the balancing
    /// pair, is an epimorphism and a bimodule map out of the free bimodule,
    /// and the induced actions form a bimodule.
    pub fn check_composite_bimodule(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<Report> {
        let c = &self.c;
        let mut r = Report::new();
        let t = self.balanced_tensor(m, n)?;
        r.extend("result", self.validate_bimodule(&t.result)?);
        let (f, g) = self.balancing_pair(m, n)?;
        r.eq_result("coequalizes", (|| -> Pair { Ok((c.compose(&f, &t.projection)?, c.compose(&g, &t.projection)?)) })());
        r.holds("projection epi", c.is_epi(&t.projection), "projection is not an epimorphism");
        let free = self.free_bimodule(&self.forget_right(m), &self.forget_left(n))?;
        let pi = BimoduleMap { src: free, dst: t.result.clone(), map: t.projection.clone() };
        r.extend("projection", self.validate_bimodule_map(&pi)?);
        Ok(r)
    }

    /// Both mixed associators: their defining squares, invertibility, the
    /// bimodule-map property, and agreement with the fully balanced
    /// associator over the trivial monoid.
    pub fn check_induced_alpha(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<Report> {
        let c = &self.c;
        let (x, y, z) = (&m.carrier, &n.carrier, &p.carrier);
        let mut r = Report::new();

        let a = self.assoc_mixed(MixedKind::RightBalanced, m, n, p)?;
        let src = self.balanced_tensor(&self.free_bimodule(&self.forget_right(m), &self.forget_left(n))?, p)?;
        let np = self.balanced_tensor(n, p)?;
        r.eq_result(
            "right mixed square",
            (|| -> Pair {
                Ok((c.compose(&src.projection, &a.map)?, c.compose(&c.alpha(x, y, z), &c.lwhisker(x, &np.projection))?))
            })(),
        );
        r.holds("right mixed invertible", self.is_iso_map(&a), "mixed associator is not invertible");
        r.extend("right mixed", self.validate_bimodule_map(&a)?);
        let restricted = self.restrict_chain(&[m.clone(), n.clone(), p.clone()], 0b01);
        let full = self.assoc(&restricted[0], &restricted[1], &restricted[2])?;
        r.holds("right mixed agrees", full == a, "differs from the balanced associator over the unit");

        let b = self.assoc_mixed(MixedKind::LeftBalanced, m, n, p)?;
        let src = self.balanced_tensor(m, &self.free_bimodule(&self.forget_right(n), &self.forget_left(p))?)?;
        let mn = self.balanced_tensor(m, n)?;
        r.eq_result(
            "left mixed square",
            (|| -> Pair {
                Ok((c.compose(&src.projection, &b.map)?, c.compose(&c.alpha_inv(x, y, z), &c.rwhisker(&mn.projection, z))?))
            })(),
        );
        r.holds("left mixed invertible", self.is_iso_map(&b), "mixed associator is not invertible");
        r.extend("left mixed", self.validate_bimodule_map(&b)?);
        let restricted = self.restrict_chain(&[m.clone(), n.clone(), p.clone()], 0b10);
        let full = self.assoc_inv(&restricted[0], &restricted[1], &restricted[2])?;
        r.holds("left mixed agrees", full == b, "differs from the balanced associator over the unit");
        Ok(r)
    }

    /// `ᾱ_{M|N|P}` and its companion are inverse bimodule isomorphisms
    /// compatible with the projections.
    pub fn check_associativity(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<Report> {
        let c = &self.c;
        let (x, y, z) = (&m.carrier, &n.carrier, &p.carrier);
        let mut r = Report::new();
        let (fwd, bwd) = self.assoc_balanced(m, n, p)?;
        r.eq_result("forward then backward", self.compose_maps(&fwd, &bwd).map(|h| (h.map, c.id(&fwd.src.carrier))));
        r.eq_result("backward then forward", self.compose_maps(&bwd, &fwd).map(|h| (h.map, c.id(&fwd.dst.carrier))));
        r.extend("forward", self.validate_bimodule_map(&fwd)?);
        r.extend("backward", self.validate_bimodule_map(&bwd)?);
        let mn = self.balanced_tensor(m, n)?;
        let np = self.balanced_tensor(n, p)?;
        let left = self.balanced_tensor(&mn.result, p)?;
        let right = self.balanced_tensor(m, &np.result)?;
        r.eq_result(
            "projection square",
            (|| -> Pair {
                let lhs = c.chain(&[&c.rwhisker(&mn.projection, z), &left.projection, &fwd.map])?;
                let rhs = c.chain(&[&c.alpha(x, y, z), &c.lwhisker(x, &np.projection), &right.projection])?;
                Ok((lhs, rhs))
            })(),
        );
        Ok(r)
    }

    fn naturality_square(&self, f: &BimoduleMap, g: &BimoduleMap, h: &BimoduleMap) -> Pair {
        let top = self.assoc(&f.src, &g.src, &h.src)?;
        let bottom = self.assoc(&f.dst, &g.dst, &h.dst)?;
        let right = self.tensor_of_maps(f, &self.tensor_of_maps(g, h)?)?;
        let left = self.tensor_of_maps(&self.tensor_of_maps(f, g)?, h)?;
        Ok((self.compose_maps(&top, &right)?.map, self.compose_maps(&left, &bottom)?.map))
    }

    /// Naturality of `ᾱ` in all three variables, for every choice of
    /// balanced or ordinary tensor at the two joints.
    pub fn check_naturality_balanced(&self, f: &BimoduleMap, g: &BimoduleMap, h: &BimoduleMap) -> CalcResult<Report> {
        let mut r = Report::new();
        for mask in 0..4u32 {
            let fs = self.restrict_map_chain(&[f.clone(), g.clone(), h.clone()], mask);
            r.eq_result(format!("naturality variant {mask:02b}"), self.naturality_square(&fs[0], &fs[1], &fs[2]));
        }
        Ok(r)
    }

    fn pentagon(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule, q: &Bimodule) -> Pair {
        let mn = self.balanced_tensor(m, n)?.result;
        let np = self.balanced_tensor(n, p)?.result;
        let pq = self.balanced_tensor(p, q)?.result;
        let lhs = self.compose_maps(&self.assoc(&mn, p, q)?, &self.assoc(m, n, &pq)?)?;
        let rhs = self.chain_maps(&[
            &self.rwhisker_map(&self.assoc(m, n, p)?, q)?,
            &self.assoc(m, &np, q)?,
            &self.lwhisker_map(m, &self.assoc(n, p, q)?)?,
        ])?;
        Ok((lhs.map, rhs.map))
    }

    /// The pentagon for `ᾱ`, for every choice of balanced or ordinary
    /// tensor at the three joints.
    pub fn check_pentagon_balanced(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule, q: &Bimodule) -> CalcResult<Report> {
        let mut r = Report::new();
        for mask in 0..8u32 {
            let ms = self.restrict_chain(&[m.clone(), n.clone(), p.clone(), q.clone()], mask);
            r.eq_result(format!("pentagon variant {mask:03b}"), self.pentagon(&ms[0], &ms[1], &ms[2], &ms[3]));
        }
        Ok(r)
    }

    /// `ᾱ_{I,M|N} • λ = λ_M ⊗_B N` and `ᾱ⁻¹_{M|N,I} • ρ = M ⊗_B ρ_N`.
    pub fn check_unitor_triangles(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<Report> {
        let c = &self.c;
        let mut r = Report::new();
        let unit = self.identity_bimodule(&self.trivial_monoid());
        let mn = self.balanced_tensor(m, n)?;
        r.eq_result(
            "left unitor triangle",
            (|| -> Pair {
                let a = self.assoc_mixed(MixedKind::RightBalanced, &unit, m, n)?;
                let lhs = c.compose(&a.map, &c.lambda(&mn.result.carrier))?;
                let m_left = self.forget_left(m);
                let free = self.free_bimodule(&unit, &m_left)?;
                let lam = BimoduleMap { src: free, dst: m_left, map: c.lambda(&m.carrier) };
                Ok((lhs, self.rwhisker_map(&lam, n)?.map))
            })(),
        );
        r.eq_result(
            "right unitor triangle",
            (|| -> Pair {
                let a = self.assoc_mixed(MixedKind::LeftBalanced, m, n, &unit)?;
                let lhs = c.compose(&a.map, &c.rho(&mn.result.carrier))?;
                let n_right = self.forget_right(n);
                let free = self.free_bimodule(&n_right, &unit)?;
                let rho = BimoduleMap { src: free, dst: n_right, map: c.rho(&n.carrier) };
                Ok((lhs, self.lwhisker_map(m, &rho)?.map))
            })(),
        );
        Ok(r)
    }

    /// `ℓ̄_M` and `r̄_M` are bimodule isomorphisms with the explicit inverses,
    /// and both unit coequalizers split.
    pub fn check_unitality(&self, m: &Bimodule) -> CalcResult<Report> {
        let c = &self.c;
        let mut r = Report::new();
        let (a, b, x) = (&m.left.carrier, &m.right.carrier, &m.carrier);
        for (side, u, inv) in
            [("left", self.unit_left(m)?, self.unit_left_inv(m)?), ("right", self.unit_right(m)?, self.unit_right_inv(m)?)]
        {
            r.extend(&format!("{side} unitor"), self.validate_bimodule_map(&u)?);
            r.extend(&format!("{side} inverse"), self.validate_bimodule_map(&inv)?);
            r.eq_result(format!("{side} unitor then inverse"), self.compose_maps(&u, &inv).map(|h| (h.map, c.id(&u.src.carrier))));
            r.eq_result(format!("{side} inverse then unitor"), self.compose_maps(&inv, &u).map(|h| (h.map, c.id(x))));
        }

        // Left: the pair (m_A ⊗ M, α • (A ⊗ ℓ)) with e = ℓ, s = λ⁻¹ • (e_A ⊗ M).
        let l = &m.lact;
        let f = c.rwhisker(&m.left.mult, x);
        let g = c.compose(&c.alpha(a, a, x), &c.lwhisker(a, l))?;
        let s = c.compose(&c.lambda_inv(x), &c.rwhisker(&m.left.unit, x))?;
        let ax = self.t(a, x);
        // Section inserting the unit in the middle, as in the textbook
        // argument, and one inserting it on the far left.
        let mid = c.chain(&[&c.lwhisker(a, &c.lambda_inv(x)), &c.lwhisker(a, &c.rwhisker(&m.left.unit, x)), &c.alpha_inv(a, a, x)])?;
        let outer = c.chain(&[&c.lambda_inv(&ax), &c.rwhisker(&m.left.unit, &ax), &c.alpha_inv(a, a, x)])?;
        self.split_diagrams(&mut r, "left", &f, &g, l, &s, &mid, &outer)?;

        // Right: the pair (r_M ⊗ B, α • (M ⊗ m_B)) with e = r, s = ρ⁻¹ • (M ⊗ e_B).
        let ra = &m.ract;
        let f = c.rwhisker(ra, b);
        let g = c.compose(&c.alpha(x, b, b), &c.lwhisker(x, &m.right.mult))?;
        let s = c.compose(&c.rho_inv(x), &c.lwhisker(x, &m.right.unit))?;
        let xb = self.t(x, b);
        let mid = c.compose(&c.rwhisker(&c.rho_inv(x), b), &c.rwhisker(&c.lwhisker(x, &m.right.unit), b))?;
        let outer = c.chain(&[&c.rho_inv(&xb), &c.lwhisker(&xb, &m.right.unit)])?;
        self.split_diagrams(&mut r, "right", &g, &f, ra, &s, &mid, &outer)?;
        Ok(r)
    }

    /// `e` coequalizes `(f, g)`, `s` is a section of `e`, `mid` is a section
    /// of both `f` and `g`, and `outer` exhibits a split coequalizer:
    /// `outer • f = id` and `outer • g = e • s`.
    #[allow(clippy::too_many_arguments)]
    fn split_diagrams(&self, r: &mut Report, side: &str, f: &Mor, g: &Mor, e: &Mor, s: &Mor, mid: &Mor, outer: &Mor) -> CalcResult<()> {
        let c = &self.c;
        r.eq_result(format!("{side} split: coequalizes"), (|| -> Pair { Ok((c.compose(f, e)?, c.compose(g, e)?)) })());
        r.eq_result(format!("{side} split: section of action"), (|| -> Pair { Ok((c.compose(s, e)?, c.id(&e.dst))) })());
        r.eq_result(format!("{side} split: middle section of first"), (|| -> Pair { Ok((c.compose(mid, f)?, c.id(&f.dst))) })());
        r.eq_result(format!("{side} split: middle section of second"), (|| -> Pair { Ok((c.compose(mid, g)?, c.id(&g.dst))) })());
        r.eq_result(format!("{side} split: outer section"), (|| -> Pair { Ok((c.compose(outer, f)?, c.id(&f.dst))) })());
        r.eq_result(format!("{side} split: outer swap"), (|| -> Pair { Ok((c.compose(outer, g)?, c.compose(e, s)?)) })());
        Ok(())
    }

    /// `(φ ⊗_B N) • (M' ⊗_B ψ) = φ ⊗_B ψ = (M ⊗_B ψ) • (φ ⊗_B N')`.
    pub fn check_interchange(&self, f: &BimoduleMap, g: &BimoduleMap) -> CalcResult<Report> {
        let mut r = Report::new();
        let both = self.tensor_of_maps(f, g)?;
        let a = self.compose_maps(&self.rwhisker_map(f, &g.src)?, &self.lwhisker_map(&f.dst, g)?)?;
        let b = self.compose_maps(&self.lwhisker_map(&f.src, g)?, &self.rwhisker_map(f, &g.dst)?)?;
        r.equal("interchange first", a.map, both.map.clone());
        r.equal("interchange second", b.map, both.map);
        Ok(r)
    }

    /// `φ` is recovered from `φ ⊗_B B`, and `A ⊗_A φ` from `P ⊗_A φ` for an
    /// (A,A)-bimodule isomorphism `eps: P → A`; invertibility transfers.
    pub fn check_reductions(&self, f: &BimoduleMap, p: &Bimodule, eps: &BimoduleMap) -> CalcResult<Report> {
        let mut r = Report::new();
        let id_a = self.identity_bimodule(&f.src.left);
        let id_b = self.identity_bimodule(&f.src.right);
        if eps.src != *p || eps.dst != id_a {
            return Err(CalcError::ShapeMismatch("eps must map P to the identity bimodule of the left monoid".into()));
        }
        let fb = self.rwhisker_map(f, &id_b)?;
        r.eq_result(
            "first reduction",
            (|| -> Pair {
                let lhs = self.chain_maps(&[&self.inverse_map(&self.unit_right(&f.src)?)?, &fb, &self.unit_right(&f.dst)?])?;
                Ok((lhs.map, f.map.clone()))
            })(),
        );
        r.holds("first reduction iso transfer", self.is_iso_map(f) == self.is_iso_map(&fb), "invertibility differs");

        let af = self.lwhisker_map(&id_a, f)?;
        let pf = self.lwhisker_map(p, f)?;
        r.eq_result(
            "second reduction",
            (|| -> Pair {
                let rhs = self.chain_maps(&[
                    &self.inverse_map(&self.rwhisker_map(eps, &f.src)?)?,
                    &pf,
                    &self.rwhisker_map(eps, &f.dst)?,
                ])?;
                Ok((af.map.clone(), rhs.map))
            })(),
        );
        r.holds("second reduction iso transfer", self.is_iso_map(&af) == self.is_iso_map(&pf), "invertibility differs");
        Ok(r)
    }

    /// `M ⊗_B γ • M ⊗_B γ' = M ⊗_B (γ • γ')`.
    pub fn check_epi_cancellation(&self, m: &Bimodule, g: &BimoduleMap, g2: &BimoduleMap) -> CalcResult<Report> {
        let mut r = Report::new();
        let gg = self.compose_maps(g, g2)?;
        r.eq_result(
            "whiskered composite",
            (|| -> Pair {
                Ok((self.compose_maps(&self.lwhisker_map(m, g)?, &self.lwhisker_map(m, g2)?)?.map, self.lwhisker_map(m, &gg)?.map))
            })(),
        );
        Ok(r)
    }

    /// `M ⊗_B id = id`, and `M ⊗_B γ` is inverted by `M ⊗_B γ⁻¹` when `γ`
    /// is an isomorphism.
    pub fn check_tensor_with_iso(&self, m: &Bimodule, g: &BimoduleMap) -> CalcResult<Report> {
        let c = &self.c;
        let mut r = Report::new();
        let t = self.balanced_tensor(m, &g.src)?;
        r.eq_result("identity", self.lwhisker_map(m, &self.id_map(&g.src)).map(|h| (h.map, c.id(&t.result.carrier))));
        if let Ok(inv) = self.inverse_map(g) {
            r.eq_result(
                "inverse",
                (|| -> Pair {
                    let mg = self.lwhisker_map(m, g)?;
                    Ok((self.compose_maps(&mg, &self.lwhisker_map(m, &inv)?)?.map, c.id(&mg.src.carrier)))
                })(),
            );
        }
        Ok(r)
    }
}
