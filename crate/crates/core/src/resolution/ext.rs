use super::{lift, minimal_presentation, minimal_free_resolution, syzygies, GradedFreeModule, ModuleMap, Resolution};
use crate::error::{Error, Result};
use crate::groebner::GbOptions;
use crate::ideals::Ideal;
use crate::polyring::Polynomial;

/// `Hom(−, R)` of a map: the transpose between the dual modules.
pub fn dual(m: &ModuleMap) -> ModuleMap {
    m.transpose()
}

/// Presentation of `Ext^r(M, R)` where `res` resolves `M`: the homology at
/// position `r` of the dual complex, as (kernel) modulo (image).
pub fn ext_module(res: &Resolution, r: usize) -> Result<ModuleMap> {
    let p = res.length();
    if r > p {
        return Err(Error::ExtOutOfRange { index: r, length: p });
    }
    let ring = res.ring();
    let fr = res.module(r).dual();
    // δ^{r-1} = d_r^T : F_{r-1}^* → F_r^*
    let incoming = if r == 0 { ModuleMap::zero_from(ring, fr.clone()) } else { res.maps()[r - 1].transpose() };
    if r == p {
        return minimal_presentation(&incoming, &GbOptions::default());
    }
    // kernel of δ^r = d_{r+1}^T : F_r^* → F_{r+1}^*
    let kernel = syzygies(&res.maps()[r].transpose())?;
    let g = kernel.source().clone();
    let mut columns: Vec<(i64, Vec<Polynomial>)> = Vec::new();
    for j in 0..incoming.source().rank() {
        let x = lift(&kernel, &incoming.column(j))?.expect("image lies in the kernel of the next map");
        columns.push((incoming.source().twists()[j], x));
    }
    let relations = syzygies(&kernel)?;
    for j in 0..relations.source().rank() {
        columns.push((relations.source().twists()[j], relations.column(j)));
    }
    let source = GradedFreeModule::new(columns.iter().map(|c| c.0).collect());
    let matrix = (0..g.rank()).map(|i| columns.iter().map(|c| c.1[i].clone()).collect()).collect();
    let pres = ModuleMap::new(ring, source, g, matrix)?;
    minimal_presentation(&pres, &GbOptions::default())
}

/// Presentation of `ω = Ext^r(R/I, R)(−N)` with `N` the sum of the variable
/// degrees; its target twists are the generator degrees of `ω`.
pub fn canonical_module(i: &Ideal, r: usize) -> Result<ModuleMap> {
    let res = minimal_free_resolution(i)?;
    let ext = ext_module(&res, r)?;
    let n: i64 = i.ring().weights().iter().map(|&w| w as i64).sum();
    Ok(ModuleMap::new_unchecked(
        i.ring(),
        ext.source().shifted(n),
        ext.target().shifted(n),
        ext.matrix().to_vec(),
    ))
}
