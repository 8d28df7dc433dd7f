use super::data::{associated_dhcp, HcpData};
use crate::dhcp::{check_dhcp_morphism, check_morphism_normal, check_short_exact_dhcp, DhcpMorphism};
use crate::error::Result;
use crate::hopfcore::{check_conormal, check_hopf_morphism};
use crate::report::{witness, Check, Report};
use crate::superlin::Matrix;

/// A morphism of pairs `(C_1, W_1) -> (C_2, W_2)`: a Hopf algebra map
/// `f: C_1 -> C_2` and a linear map `g: W_1 -> W_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcpMorphism {
    pub f: Matrix,
    pub g: Matrix,
}

impl HcpMorphism {
    /// The morphism `(f*, g*)` of associated pairs, in the opposite direction.
    pub fn transpose(&self) -> DhcpMorphism {
        DhcpMorphism {
            f: self.f.transpose(),
            g: self.g.transpose(),
        }
    }
}

/// `f` is a Hopf algebra map and `(f*, g*)` is a morphism of the associated
/// pairs, which says that `g` is colinear along `f` and respects brackets.
pub fn check_hcp_morphism(src: &HcpData, tgt: &HcpData, m: &HcpMorphism) -> Result<Report> {
    let mut r = Report::new();
    r.extend_prefixed("c-", check_hopf_morphism(&src.c, &tgt.c, &m.f));
    if !r.passed() {
        return Ok(r);
    }
    let (ps, pt) = (associated_dhcp(src)?, associated_dhcp(tgt)?);
    r.extend_prefixed("dual-", check_dhcp_morphism(&pt, &ps, &m.transpose()));
    Ok(r)
}

pub fn is_hcp_isomorphism(src: &HcpData, tgt: &HcpData, m: &HcpMorphism) -> Result<Report> {
    let mut r = check_hcp_morphism(src, tgt, m)?;
    for (name, mat) in [("c-bijective", &m.f), ("w-bijective", &m.g)] {
        let ok = mat.nrows() == mat.ncols() && mat.inverse().is_some();
        r.push(Check::from_result(
            name,
            (!ok).then(|| witness(vec![name], format!("rank {}", mat.rank()), format!("rank {}", mat.ncols()))),
        ));
    }
    Ok(r)
}

/// For a morphism with `f` and `g` surjective, `A(f, g)` is conormal exactly
/// when `f` is conormal and `(f*, g*)` has normal image. Fails with
/// `NotInjective` when a transpose is not injective.
pub fn check_conormal_hcp(src: &HcpData, tgt: &HcpData, m: &HcpMorphism) -> Result<Report> {
    let mut r = Report::new();
    r.push(check_conormal(&src.c, &tgt.c, &m.f));
    let (ps, pt) = (associated_dhcp(src)?, associated_dhcp(tgt)?);
    r.extend_prefixed("dual-", check_morphism_normal(&pt, &ps, &m.transpose())?);
    Ok(r)
}

/// Exactness of `(C_1, W_1) -> (C_2, W_2) -> (C_3, W_3)`, checked on the
/// reversed sequence of associated pairs.
pub fn check_short_exact_hcp(p: [&HcpData; 3], first: &HcpMorphism, second: &HcpMorphism) -> Result<Report> {
    let d = [associated_dhcp(p[2])?, associated_dhcp(p[1])?, associated_dhcp(p[0])?];
    Ok(check_short_exact_dhcp([&d[0], &d[1], &d[2]], &second.transpose(), &first.transpose()))
}
