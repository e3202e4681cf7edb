//! A second computation of balanced tensors, written against the raw
//! carriers and actions rather than the categorical coequalizer.

use thiserror::Error;

use crate::bimodule::{BalancedTensor, Bimodule, Monoid};
use crate::harness::format::{InstanceSpec, Kind};
use crate::instances::finset::table;
use crate::instances::finvect::{dim, matrix};
use crate::instances::func;
use crate::instances::product::{pair_mor, split_mor, split_obj};
use crate::kernel::{Mor, MorData, Obj};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("no independent oracle for {0}")]
    UnsupportedInstance(String),
}

fn card(x: &Obj) -> usize {
    match x {
        Obj::Set(n) => *n,
        _ => unreachable!("not a finite set"),
    }
}

/// Quotient of `M ⊔ N` by the relations `m·b ~ b·n` generated elementwise.
fn finset_tensor(m: &Bimodule, n: &Bimodule) -> (Obj, Mor) {
    let (dm, db, dn) = (card(&m.carrier), card(&m.right.carrier), card(&n.carrier));
    let (ract, lact) = (table(&m.ract), table(&n.lact));
    let mut parent: Vec<usize> = (0..dm + dn).collect();
    fn root(p: &[usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut join = |a: usize, b: usize| {
        let (ra, rb) = (root(&parent, a), root(&parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    };
    for x in 0..dm {
        join(ract[x], x);
    }
    for b in 0..db {
        join(ract[dm + b], dm + lact[b]);
    }
    for y in 0..dn {
        join(dm + y, dm + lact[db + y]);
    }
    let roots: Vec<usize> = (0..dm + dn).map(|x| root(&parent, x)).collect();
    let mut seen: Vec<usize> = Vec::new();
    let labels: Vec<usize> = roots
        .iter()
        .map(|r| {
            if let Some(i) = seen.iter().position(|s| s == r) {
                i
            } else {
                seen.push(*r);
                seen.len() - 1
            }
        })
        .collect();
    (Obj::Set(seen.len()), func(dm + dn, seen.len(), labels))
}

/// Reduced row echelon basis of the span of `vectors`.
fn echelon(p: u64, mut rows: Vec<Vec<u64>>, width: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, i);
        let s = inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = *v * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..width {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Quotient of `M ⊗ N` by the span of `(e_m·e_b) ⊗ e_n - e_m ⊗ (e_b·e_n)`,
/// presented on the non-pivot coordinates.
fn finvect_tensor(p: u64, m: &Bimodule, n: &Bimodule) -> (Obj, Mor) {
    let (dm, db, dn) = (dim(&m.carrier), dim(&m.right.carrier), dim(&n.carrier));
    let (ract, lact) = (matrix(&m.ract), matrix(&n.lact));
    let width = dm * dn;
    let mut rel = Vec::new();
    for x in 0..dm {
        for b in 0..db {
            for y in 0..dn {
                let mut v = vec![0u64; width];
                for x2 in 0..dm {
                    v[x2 * dn + y] += u64::from(ract.get(x2, x * db + b));
                }
                for y2 in 0..dn {
                    v[x * dn + y2] += p - u64::from(lact.get(y2, b * dn + y));
                }
                rel.push(v.into_iter().map(|a| a % p).collect());
            }
        }
    }
    let (basis, pivots) = echelon(p, rel, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let mut entries = vec![0i64; free.len() * width];
    for (k, &j) in free.iter().enumerate() {
        entries[k * width + j] = 1;
        for (row, &pc) in basis.iter().zip(&pivots) {
            entries[k * width + pc] = ((p - row[j]) % p) as i64;
        }
    }
    let proj = Matrix::from_rows(p as u32, free.len(), width, entries);
    (Obj::Vect(free.len()), Mor { src: Obj::Vect(width), dst: Obj::Vect(free.len()), data: MorData::Mat(proj) })
}

fn split_monoid(a: &Monoid) -> (Monoid, Monoid) {
    let (x, y) = split_obj(&a.carrier);
    let (m1, m2) = split_mor(&a.mult);
    let (u1, u2) = split_mor(&a.unit);
    (
        Monoid { carrier: x.clone(), mult: m1.clone(), unit: u1.clone() },
        Monoid { carrier: y.clone(), mult: m2.clone(), unit: u2.clone() },
    )
}

fn split_bimodule(m: &Bimodule) -> (Bimodule, Bimodule) {
    let (a1, a2) = split_monoid(&m.left);
    let (b1, b2) = split_monoid(&m.right);
    let (x, y) = split_obj(&m.carrier);
    let (l1, l2) = split_mor(&m.lact);
    let (r1, r2) = split_mor(&m.ract);
    (
        Bimodule { left: a1, right: b1, carrier: x.clone(), lact: l1.clone(), ract: r1.clone() },
        Bimodule { left: a2, right: b2, carrier: y.clone(), lact: l2.clone(), ract: r2.clone() },
    )
}

/// The apex and projection of `M ⊗_B N`, in the same canonical form as the
/// kernel's coequalizers.
pub fn oracle_balanced_tensor(spec: &InstanceSpec, m: &Bimodule, n: &Bimodule) -> Result<(Obj, Mor), OracleError> {
    if spec.mutation.is_some() {
        return Err(OracleError::UnsupportedInstance("mutated instances".into()));
    }
    match spec.kind {
        Kind::FinsetDisjoint => Ok(finset_tensor(m, n)),
        Kind::Finvect => Ok(finvect_tensor(spec.p.expect("finvect needs p"), m, n)),
        Kind::Product => {
            let ((m1, m2), (n1, n2)) = (split_bimodule(m), split_bimodule(n));
            let (x, f) = oracle_balanced_tensor(&spec.children[0], &m1, &n1)?;
            let (y, g) = oracle_balanced_tensor(&spec.children[1], &m2, &n2)?;
            Ok((Obj::pair(x, y), pair_mor(f, g)))
        }
        Kind::Opposite => Err(OracleError::UnsupportedInstance("opposite categories".into())),
    }
}

/// `Ok(None)` when the kernel agrees with the oracle, otherwise a
/// description of the disagreement.
pub fn compare_tensor(spec: &InstanceSpec, t: &BalancedTensor) -> Result<Option<String>, OracleError> {
    let (apex, proj) = oracle_balanced_tensor(spec, &t.factors.0, &t.factors.1)?;
    Ok(if apex != t.coequalizer.apex {
        Some(format!("apex {} != oracle {apex}", t.coequalizer.apex))
    } else if proj != t.coequalizer.projection {
        Some(format!("projection {} != oracle {proj}", t.coequalizer.projection))
    } else {
        None
    })
}
