//! Exhaustive small universes of monoids and bimodules, and seeded sampling
//! of chains and maps from them.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bimodule::{Bimodule, BimoduleMap, CalcError, CalcResult, Calculus, Monoid, SEARCH_CAP};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    rand::SeedableRng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct Universe {
    pub calc: Calculus,
    pub max_size: usize,
    pub monoids: Vec<Monoid>,
    /// `bimodules[i][j]`: every bimodule over `(monoids[i], monoids[j])`
    /// with carrier size at most `max_size`.
    pub bimodules: Vec<Vec<Vec<Bimodule>>>,
}

impl Universe {
    /// Enumerates all monoids and bimodules whose carriers have size at most
    /// `max_size`. Carriers whose hom-sets exceed the search cap are skipped.
    pub fn build(calc: &Calculus, max_size: usize) -> CalcResult<Self> {
        let objs = calc.c.objects(max_size);
        let mut monoids = Vec::new();
        for x in &objs {
            match calc.enumerate_monoids(x, SEARCH_CAP) {
                Ok(ms) => monoids.extend(ms),
                Err(CalcError::BudgetExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
        let mut bimodules = vec![vec![Vec::new(); monoids.len()]; monoids.len()];
        for (i, a) in monoids.iter().enumerate() {
            for (j, b) in monoids.iter().enumerate() {
                for x in &objs {
                    match calc.enumerate_bimodules(a, b, x, SEARCH_CAP) {
                        Ok(ms) => bimodules[i][j].extend(ms),
                        Err(CalcError::BudgetExceeded(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Ok(Universe { calc: calc.clone(), max_size, monoids, bimodules })
    }

    pub fn bimodule_count(&self) -> usize {
        self.bimodules.iter().flatten().map(Vec::len).sum()
    }

    pub fn index_of(&self, a: &Monoid) -> Option<usize> {
        self.monoids.iter().position(|m| m == a)
    }

    pub fn between(&self, a: &Monoid, b: &Monoid) -> &[Bimodule] {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => &self.bimodules[i][j],
            _ => &[],
        }
    }

    /// A chain of `len` composable bimodules over randomly chosen monoids.
    pub fn random_chain(&self, rng: &mut SampleRng, len: usize) -> Vec<Bimodule> {
        let n = self.monoids.len();
        loop {
            let idx: Vec<usize> = (0..=len).map(|_| rng.gen_range(0..n)).collect();
            let mut out = Vec::with_capacity(len);
            for w in idx.windows(2) {
                match self.bimodules[w[0]][w[1]].choose(rng) {
                    Some(m) => out.push(m.clone()),
                    None => break,
                }
            }
            if out.len() == len {
                return out;
            }
        }
    }

    /// A random bimodule map out of `m` into a random bimodule over the same
    /// monoids; the identity when no other map is found.
    pub fn random_map_from(&self, rng: &mut SampleRng, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let targets = self.between(&m.left, &m.right);
        for _ in 0..8 {
            let Some(t) = targets.choose(rng) else { break };
            match self.calc.enumerate_maps(m, t, SEARCH_CAP) {
                Ok(maps) if !maps.is_empty() => return Ok(maps.choose(rng).unwrap().clone()),
                Ok(_) | Err(CalcError::BudgetExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(self.calc.id_map(m))
    }

    /// A random bimodule automorphism of `m`.
    pub fn random_automorphism(&self, rng: &mut SampleRng, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let autos: Vec<BimoduleMap> = match self.calc.enumerate_maps(m, m, SEARCH_CAP) {
            Ok(maps) => maps.into_iter().filter(|f| self.calc.is_iso_map(f)).collect(),
            Err(CalcError::BudgetExceeded(_)) => Vec::new(),
            Err(e) => return Err(e),
        };
        Ok(autos.choose(rng).cloned().unwrap_or_else(|| self.calc.id_map(m)))
    }

    /// Every bimodule isomorphism out of `m` onto a bimodule of the
    /// universe, the identity included.
    pub fn isos_from(&self, m: &Bimodule) -> CalcResult<Vec<BimoduleMap>> {
        let mut out = Vec::new();
        for t in self.between(&m.left, &m.right) {
            if self.calc.c.size(&t.carrier) != self.calc.c.size(&m.carrier) {
                continue;
            }
            match self.calc.enumerate_maps(m, t, SEARCH_CAP) {
                Ok(maps) => out.extend(maps.into_iter().filter(|f| self.calc.is_iso_map(f))),
                Err(CalcError::BudgetExceeded(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}
