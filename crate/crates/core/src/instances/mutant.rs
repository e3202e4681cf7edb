//! Finite sets under disjoint union with a deliberately wrong associator:
//! `α_{X,Y,Z}` exchanges the `X` and `Y` blocks. Everything else matches
//! [`FinSetDisjoint`]. The triangle still commutes, the pentagon does not.

use crate::instances::finset::{card, func, FinSetDisjoint};
use crate::kernel::{KernelError, Monoidal, Mor, Obj, StructureKind};

#[derive(Debug, Clone, Copy, Default)]
pub struct SwappedAssociator;

fn block_swap(a: usize, b: usize, c: usize) -> Vec<usize> {
    (0..a + b + c)
        .map(|i| if i < a { b + i } else if i < a + b { i - a } else { i })
        .collect()
}

impl Monoidal for SwappedAssociator {
    fn name(&self) -> String {
        "finset_disjoint[swapped associator]".into()
    }

    fn unit(&self) -> Obj {
        FinSetDisjoint.unit()
    }

    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        FinSetDisjoint.tensor_obj(x, y)
    }

    fn identity(&self, x: &Obj) -> Mor {
        FinSetDisjoint.identity(x)
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        FinSetDisjoint.compose(f, g)
    }

    fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        FinSetDisjoint.tensor(f, g)
    }

    fn structure(&self, kind: StructureKind, objs: &[Obj]) -> Mor {
        match kind {
            StructureKind::Alpha | StructureKind::AlphaInv => {
                let (a, b, c) = (card(&objs[0]), card(&objs[1]), card(&objs[2]));
                let f = func(a + b + c, a + b + c, block_swap(a, b, c));
                if kind == StructureKind::Alpha {
                    f
                } else {
                    FinSetDisjoint.inverse(&f).expect("block swap is a bijection")
                }
            }
            _ => FinSetDisjoint.structure(kind, objs),
        }
    }

    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        FinSetDisjoint.coequalize(f, g)
    }

    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor {
        FinSetDisjoint.coinduce(projection, h)
    }

    fn equalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        FinSetDisjoint.equalize(f, g)
    }

    fn induce(&self, inclusion: &Mor, h: &Mor) -> Option<Mor> {
        FinSetDisjoint.induce(inclusion, h)
    }

    fn is_epi(&self, f: &Mor) -> bool {
        FinSetDisjoint.is_epi(f)
    }

    fn is_mono(&self, f: &Mor) -> bool {
        FinSetDisjoint.is_mono(f)
    }

    fn inverse(&self, f: &Mor) -> Option<Mor> {
        FinSetDisjoint.inverse(f)
    }

    fn objects(&self, max_size: usize) -> Vec<Obj> {
        FinSetDisjoint.objects(max_size)
    }

    fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        FinSetDisjoint.hom_size(x, y)
    }

    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        FinSetDisjoint.hom(x, y)
    }

    fn well_formed(&self, f: &Mor) -> bool {
        FinSetDisjoint.well_formed(f)
    }

    fn size(&self, x: &Obj) -> usize {
        card(x)
    }
}
