//! The opposite monoidal category. A morphism `X -> Y` is stored as the
//! underlying morphism `Y -> X`; coequalizers are equalizers underneath.

use crate::kernel::{KernelError, Monoidal, MonoidalInstance, Mor, MorData, Obj, StructureKind};

#[derive(Debug, Clone)]
pub struct Opposite {
    pub inner: MonoidalInstance,
}

pub fn under(f: &Mor) -> &Mor {
    match &f.data {
        MorData::Op(m) => m,
        other => panic!("expected an opposite morphism, got {other:?}"),
    }
}

pub fn op(m: Mor) -> Mor {
    Mor { src: m.dst.clone(), dst: m.src.clone(), data: MorData::Op(Box::new(m)) }
}

impl Monoidal for Opposite {
    fn name(&self) -> String {
        format!("opposite({})", self.inner.name())
    }

    fn unit(&self) -> Obj {
        self.inner.unit()
    }

    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        self.inner.tensor_obj(x, y)
    }

    fn identity(&self, x: &Obj) -> Mor {
        op(self.inner.id(x))
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        op(self.inner.raw().compose(under(g), under(f)))
    }

    fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        op(self.inner.tensor_mor(under(f), under(g)))
    }

    fn structure(&self, kind: StructureKind, objs: &[Obj]) -> Mor {
        op(self.inner.raw().structure(kind.inverse(), objs))
    }

    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let (apex, inclusion) = self.inner.raw().equalize(under(f), under(g))?;
        Ok((apex, op(inclusion)))
    }

    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor {
        match self.inner.raw().induce(under(projection), under(h)) {
            Some(u) => op(u),
            // Ill-typed on purpose; the checked wrapper rejects it.
            None => h.clone(),
        }
    }

    fn equalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let (apex, projection) = self.inner.raw().coequalize(under(f), under(g))?;
        Ok((apex, op(projection)))
    }

    fn induce(&self, inclusion: &Mor, h: &Mor) -> Option<Mor> {
        Some(op(self.inner.raw().coinduce(under(inclusion), under(h))))
    }

    fn is_epi(&self, f: &Mor) -> bool {
        self.inner.is_mono(under(f))
    }

    fn is_mono(&self, f: &Mor) -> bool {
        self.inner.is_epi(under(f))
    }

    fn inverse(&self, f: &Mor) -> Option<Mor> {
        self.inner.inverse(under(f)).map(op)
    }

    fn objects(&self, max_size: usize) -> Vec<Obj> {
        self.inner.objects(max_size)
    }

    fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        self.inner.hom_size(y, x)
    }

    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        self.inner.hom(y, x).into_iter().map(op).collect()
    }

    fn well_formed(&self, f: &Mor) -> bool {
        match &f.data {
            MorData::Op(m) => m.src == f.dst && m.dst == f.src && self.inner.well_formed(m),
            _ => false,
        }
    }

    fn size(&self, x: &Obj) -> usize {
        self.inner.size(x)
    }
}
