//! The presentation builders: every presentation catalogued from the source
//! material, with parametric coefficients.

use super::{CatalogError, DiagramType, Presentation};
use crate::exactnum::{rat, ParamRat, ParamScope, Rat};
use crate::freealg::{Alphabet, NcPoly, TermOrder};
use std::sync::Arc;

/// Catalog keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetKey {
    /// Generators T_k with cyclotomically deformed minimal polynomials and
    /// product q.
    Defining(DiagramType),
    /// The rescaled (b, c[, d]) presentations admitting finite or small
    /// Groebner bases.
    Efficient(DiagramType),
    /// E8 in generators c, d_0..d_5 with d_i = b c^{-i}.
    EfficientE8D,
    /// D4 in generators c, z_1 = d c^{-1}, z_2 = c^{-1} b.
    EfficientD4Z,
    /// Associated graded of the 123 filtration (E6, E7, E8), generators c, d.
    Graded123(DiagramType),
    /// Associated graded of the D4 112 filtration, generators c, z_1, z_2
    /// (here z_1 is the image of c^{-1} b and z_2 of d c^{-1}).
    Graded112D4,
    /// Associated graded of the D4 111 filtration, generators c, w_1..w_3.
    Graded111D4,
    /// Associated graded of the E6 112 filtration, generators c, d, e.
    Graded112E6,
    /// The twisted group algebra B(q): T_k^{d_k} = 1, prod T_k = q.
    GroupB(DiagramType),
    /// Alternative generators X, P, s of B(q) with their relation set.
    AltGroup(DiagramType),
    /// The additive analogue K(mu): nodal corner of the deformed
    /// preprojective algebra.
    AdditiveK(DiagramType),
    /// The quotient Gamma_+ of the McKay group by its center.
    GammaPlus(DiagramType),
    /// Type-A leg relations of the multiplicative preprojective algebra.
    LegA(usize),
    /// The deformed Coxeter algebra carrying the length filtration, with
    /// braid relations in balanced form.
    Coxeter(DiagramType),
}

impl PresetKey {
    pub fn parse(s: &str) -> Option<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let ty = arg.and_then(DiagramType::parse);
        match head {
            "defining" => Some(Self::Defining(ty?)),
            "efficient" => match arg {
                Some("E8d") => Some(Self::EfficientE8D),
                Some("D4z") => Some(Self::EfficientD4Z),
                _ => Some(Self::Efficient(ty?)),
            },
            "efficient_e8_d" => Some(Self::EfficientE8D),
            "efficient_d4_z" => Some(Self::EfficientD4Z),
            "graded_123" => Some(Self::Graded123(ty?)),
            "graded_112_D4" => Some(Self::Graded112D4),
            "graded_111_D4" => Some(Self::Graded111D4),
            "graded_112_E6" => Some(Self::Graded112E6),
            "group_B" => Some(Self::GroupB(ty?)),
            "alt_group" => Some(Self::AltGroup(ty?)),
            "additive_K" => Some(Self::AdditiveK(ty?)),
            "gamma_plus" => Some(Self::GammaPlus(ty?)),
            "legA" => arg.and_then(|a| a.parse().ok()).map(Self::LegA),
            "coxeter" => Some(Self::Coxeter(ty?)),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Defining(t) => format!("defining:{}", t),
            Self::Efficient(t) => format!("efficient:{}", t),
            Self::EfficientE8D => "efficient_e8_d".into(),
            Self::EfficientD4Z => "efficient_d4_z".into(),
            Self::Graded123(t) => format!("graded_123:{}", t),
            Self::Graded112D4 => "graded_112_D4".into(),
            Self::Graded111D4 => "graded_111_D4".into(),
            Self::Graded112E6 => "graded_112_E6".into(),
            Self::GroupB(t) => format!("group_B:{}", t),
            Self::AltGroup(t) => format!("alt_group:{}", t),
            Self::AdditiveK(t) => format!("additive_K:{}", t),
            Self::GammaPlus(t) => format!("gamma_plus:{}", t),
            Self::LegA(m) => format!("legA:{}", m),
            Self::Coxeter(t) => format!("coxeter:{}", t),
        }
    }

    pub fn list() -> Vec<PresetKey> {
        let mut out = vec![];
        for t in DiagramType::ALL {
            out.push(Self::Defining(t));
            out.push(Self::Efficient(t));
        }
        out.push(Self::EfficientE8D);
        out.push(Self::EfficientD4Z);
        for t in [DiagramType::E6, DiagramType::E7, DiagramType::E8] {
            out.push(Self::Graded123(t));
        }
        out.push(Self::Graded112D4);
        out.push(Self::Graded111D4);
        out.push(Self::Graded112E6);
        for t in DiagramType::ALL {
            out.push(Self::GroupB(t));
            out.push(Self::AltGroup(t));
            out.push(Self::AdditiveK(t));
            out.push(Self::GammaPlus(t));
            out.push(Self::Coxeter(t));
        }
        out.push(Self::LegA(2));
        out.push(Self::LegA(3));
        out
    }
}

/// Small builder holding the presentation's alphabet and parameter scope.
struct Pb {
    a: Arc<Alphabet>,
    o: TermOrder,
    sc: ParamScope,
}

impl Pb {
    fn new(names: &[(&str, u32)], precedence: &[&str], params: &[&str]) -> Self {
        let a = Alphabet::new(names, precedence);
        let o = TermOrder::new(a.clone());
        let sc = crate::exactnum::scope(params);
        Pb { a, o, sc }
    }

    fn g(&self, name: &str) -> NcPoly<ParamRat> {
        NcPoly::gen(self.a.gen(name))
    }

    fn p(&self, name: &str) -> ParamRat {
        ParamRat::var(&self.sc, name)
    }

    fn c(&self, r: Rat) -> ParamRat {
        ParamRat::constant(&self.sc, r)
    }

    fn int(&self, n: i64) -> ParamRat {
        self.c(rat(n, 1))
    }

    fn one(&self) -> NcPoly<ParamRat> {
        NcPoly::one()
    }

    fn s(&self, pr: ParamRat) -> NcPoly<ParamRat> {
        NcPoly::scalar(pr)
    }

    fn mul(&self, xs: &[&NcPoly<ParamRat>]) -> NcPoly<ParamRat> {
        let mut acc = NcPoly::one();
        for x in xs {
            acc = acc.mul(x, &self.o);
        }
        acc
    }

    fn pow(&self, x: &NcPoly<ParamRat>, k: u32) -> NcPoly<ParamRat> {
        let mut acc = NcPoly::one();
        for _ in 0..k {
            acc = acc.mul(x, &self.o);
        }
        acc
    }

    fn sum(&self, xs: &[NcPoly<ParamRat>]) -> NcPoly<ParamRat> {
        let mut acc = NcPoly::zero();
        for x in xs {
            acc = acc.add(x, &self.o);
        }
        acc
    }

    fn finish(
        self,
        name: &str,
        relations: Vec<NcPoly<ParamRat>>,
        citation: &str,
    ) -> Presentation {
        Presentation {
            name: name.to_string(),
            alphabet: self.a,
            order: self.o,
            relations,
            params: self.sc,
            citation: citation.to_string(),
        }
    }
}

/// Minimal polynomial prod_j (x - roots[j]) as an NcPoly in a single
/// generator, with ParamRat root values.
fn min_poly(pb: &Pb, x: &NcPoly<ParamRat>, roots: &[ParamRat]) -> NcPoly<ParamRat> {
    let mut acc = pb.one();
    for r in roots {
        let factor = x.sub(&pb.s(r.clone()), &pb.o);
        acc = acc.mul(&factor, &pb.o);
    }
    acc
}

/// The full catalog dispatch.
pub fn presentation(key: PresetKey) -> Result<Presentation, CatalogError> {
    Ok(match key {
        PresetKey::Defining(ty) => defining(ty),
        PresetKey::Efficient(ty) => efficient(ty),
        PresetKey::EfficientE8D => efficient_e8_d(),
        PresetKey::EfficientD4Z => efficient_d4_z(),
        PresetKey::Graded123(ty) => match ty {
            DiagramType::E6 | DiagramType::E7 | DiagramType::E8 => graded_123(ty),
            _ => return Err(CatalogError::UnknownKey(key.name())),
        },
        PresetKey::Graded112D4 => graded_112_d4(),
        PresetKey::Graded111D4 => graded_111_d4(),
        PresetKey::Graded112E6 => graded_112_e6(),
        PresetKey::GroupB(ty) => group_b(ty),
        PresetKey::AltGroup(ty) => alt_group(ty),
        PresetKey::AdditiveK(ty) => additive_k(ty),
        PresetKey::GammaPlus(ty) => gamma_plus(ty),
        PresetKey::LegA(m) => {
            if m < 2 || m > 6 {
                return Err(CatalogError::UnknownKey(key.name()));
            }
            leg_a(m)
        }
        PresetKey::Coxeter(ty) => coxeter_deformed(ty),
    })
}

fn param_names_u(ty: DiagramType, with_q: bool) -> Vec<String> {
    let mut out = vec![];
    for (k, &d) in ty.legs().iter().enumerate() {
        for j in 1..=d {
            out.push(format!("u{}{}", k + 1, j));
        }
    }
    if with_q {
        out.push("q".to_string());
    }
    out
}

fn defining(ty: DiagramType) -> Presentation {
    let gens: Vec<(&str, u32)> = match ty {
        DiagramType::D4 => vec![("a", 1), ("b", 1), ("c", 0), ("d", 1)],
        _ => vec![("a", 1), ("b", 1), ("c", 0)],
    };
    let prec: Vec<&str> = match ty {
        DiagramType::D4 => vec!["a", "b", "d", "c"],
        _ => vec!["a", "b", "c"],
    };
    let params = param_names_u(ty, true);
    let params_ref: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
    let pb = Pb::new(&gens, &prec, &params_ref);
    let mut rels = vec![];
    let gen_names: Vec<&str> = match ty {
        DiagramType::D4 => vec!["a", "b", "c", "d"],
        _ => vec!["a", "b", "c"],
    };
    for (k, &d) in ty.legs().iter().enumerate() {
        let x = pb.g(gen_names[k]);
        let roots: Vec<ParamRat> = (1..=d).map(|j| pb.p(&format!("u{}{}", k + 1, j))).collect();
        rels.push(min_poly(&pb, &x, &roots));
    }
    let prod = pb.mul(&gen_names.iter().map(|n| pb.g(n)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    rels.push(prod.sub(&pb.s(pb.p("q")), &pb.o));
    pb.finish(
        &format!("defining:{}", ty),
        rels,
        "deformed minimal polynomials for the T_k with product q",
    )
}

fn efficient(ty: DiagramType) -> Presentation {
    match ty {
        DiagramType::D4 => {
            let pb = Pb::new(
                &[("b", 1), ("c", 0), ("d", 1)],
                &["b", "d", "c"],
                &["g1", "f1", "h1", "e1", "Q"],
            );
            let (b, c, d) = (pb.g("b"), pb.g("c"), pb.g("d"));
            let r1 = pb.pow(&c, 2).sub(&c.scale(&pb.p("g1")), &pb.o).add(&pb.one(), &pb.o);
            let r2 = pb.pow(&b, 2).sub(&b.scale(&pb.p("f1")), &pb.o).add(&pb.one(), &pb.o);
            let r3 = pb.pow(&d, 2).sub(&d.scale(&pb.p("h1")), &pb.o).add(&pb.one(), &pb.o);
            let bcd = pb.mul(&[&b, &c, &d]);
            let r4 = pb
                .pow(&bcd, 2)
                .sub(&bcd.scale(&pb.p("e1")), &pb.o)
                .add(&pb.s(pb.p("Q")), &pb.o);
            pb.finish(
                "efficient:D4",
                vec![r1, r2, r3, r4],
                "rescaled generators b, c, d; Q = q^2",
            )
        }
        DiagramType::E6 => {
            let pb = Pb::new(
                &[("b", 1), ("c", 0)],
                &["b", "c"],
                &["g1", "g2", "f1", "f2", "e1", "e2", "Q"],
            );
            let (b, c) = (pb.g("b"), pb.g("c"));
            let r1 = pb
                .pow(&c, 3)
                .sub(&pb.pow(&c, 2).scale(&pb.p("g1")), &pb.o)
                .add(&c.scale(&pb.p("g2")), &pb.o)
                .sub(&pb.one(), &pb.o);
            let r2 = pb
                .pow(&b, 3)
                .sub(&pb.pow(&b, 2).scale(&pb.p("f1")), &pb.o)
                .add(&b.scale(&pb.p("f2")), &pb.o)
                .sub(&pb.one(), &pb.o);
            let bc = pb.mul(&[&b, &c]);
            let r3 = pb
                .pow(&bc, 3)
                .sub(&pb.pow(&bc, 2).scale(&pb.p("e2")), &pb.o)
                .add(&bc.scale(&pb.p("e1")), &pb.o)
                .sub(&pb.s(pb.p("Q")), &pb.o);
            pb.finish("efficient:E6", vec![r1, r2, r3], "generators b, c; Q = q^3")
        }
        DiagramType::E7 => {
            let pb = Pb::new(
                &[("b", 1), ("c", 0)],
                &["b", "c"],
                &["g1", "g2", "g3", "f1", "f2", "f3", "e1", "Q"],
            );
            let (b, c) = (pb.g("b"), pb.g("c"));
            let r1 = pb
                .pow(&c, 4)
                .sub(&pb.pow(&c, 3).scale(&pb.p("g1")), &pb.o)
                .add(&pb.pow(&c, 2).scale(&pb.p("g2")), &pb.o)
                .sub(&c.scale(&pb.p("g3")), &pb.o)
                .add(&pb.one(), &pb.o);
            let r2 = pb
                .pow(&b, 4)
                .sub(&pb.pow(&b, 3).scale(&pb.p("f1")), &pb.o)
                .add(&pb.pow(&b, 2).scale(&pb.p("f2")), &pb.o)
                .sub(&b.scale(&pb.p("f3")), &pb.o)
                .add(&pb.s(pb.p("Q")), &pb.o);
            let bc = pb.mul(&[&b, &c]);
            let r3 = pb
                .pow(&bc, 2)
                .sub(&bc.scale(&pb.p("e1")), &pb.o)
                .add(&pb.s(pb.p("Q")), &pb.o);
            pb.finish("efficient:E7", vec![r1, r2, r3], "generators b, c; Q = q^4")
        }
        DiagramType::E8 => {
            let pb = Pb::new(
                &[("b", 1), ("c", 0)],
                &["b", "c"],
                &["g1", "g2", "g3", "g4", "g5", "f1", "f2", "e1", "Q"],
            );
            let (b, c) = (pb.g("b"), pb.g("c"));
            let mut r1 = pb.pow(&c, 6);
            for (k, sign) in (1..=5).zip([-1i64, 1, -1, 1, -1]) {
                let term = pb
                    .pow(&c, 6 - k)
                    .scale(&(pb.p(&format!("g{}", k)) * pb.int(sign)));
                r1 = r1.add(&term, &pb.o);
            }
            r1 = r1.add(&pb.one(), &pb.o);
            let r2 = pb
                .pow(&b, 3)
                .sub(&pb.pow(&b, 2).scale(&pb.p("f1")), &pb.o)
                .add(&b.scale(&pb.p("f2")), &pb.o)
                .add(&pb.s(pb.p("Q")), &pb.o);
            let bc = pb.mul(&[&b, &c]);
            let r3 = pb
                .pow(&bc, 2)
                .sub(&bc.scale(&pb.p("e1")), &pb.o)
                .add(&pb.s(pb.p("Q")), &pb.o);
            pb.finish("efficient:E8", vec![r1, r2, r3], "generators b, c; Q = q^6")
        }
    }
}

/// The E8 c-sextic shared by the (b, c) and (c, d_0..d_5) presentations.
fn e8_c_poly(pb: &Pb) -> NcPoly<ParamRat> {
    let c = pb.g("c");
    let mut r = pb.pow(&c, 6);
    for (k, sign) in (1..=5).zip([-1i64, 1, -1, 1, -1]) {
        let term = pb.pow(&c, 6 - k).scale(&(pb.p(&format!("g{}", k)) * pb.int(sign)));
        r = r.add(&term, &pb.o);
    }
    r.add(&pb.one(), &pb.o)
}

fn efficient_e8_d() -> Presentation {
    let pb = Pb::new(
        &[
            ("c", 0),
            ("d0", 1),
            ("d1", 1),
            ("d2", 1),
            ("d3", 1),
            ("d4", 1),
            ("d5", 1),
        ],
        &["c", "d1", "d3", "d5", "d0", "d2", "d4"],
        &["g1", "g2", "g3", "g4", "g5", "f1", "f2", "e1", "Q"],
    );
    let mut rels = vec![e8_c_poly(&pb)];
    let d0 = pb.g("d0");
    let r2 = pb
        .pow(&d0, 3)
        .sub(&pb.pow(&d0, 2).scale(&pb.p("f1")), &pb.o)
        .add(&d0.scale(&pb.p("f2")), &pb.o)
        .add(&pb.s(pb.p("Q")), &pb.o);
    rels.push(r2);
    let d0c = pb.mul(&[&d0, &pb.g("c")]);
    let r3 = pb
        .pow(&d0c, 2)
        .sub(&d0c.scale(&pb.p("e1")), &pb.o)
        .add(&pb.s(pb.p("Q")), &pb.o);
    rels.push(r3);
    for i in 1..=5u32 {
        let di = pb.g(&format!("d{}", i));
        let dprev = pb.g(&format!("d{}", i - 1));
        rels.push(pb.mul(&[&di, &pb.g("c")]).sub(&dprev, &pb.o));
    }
    pb.finish(
        "efficient_e8_d",
        rels,
        "E8 in generators c, d_i = b c^{-i}; variable ordering c, d1, d3, d5, d0, d2, d4",
    )
}

fn efficient_d4_z() -> Presentation {
    let pb = Pb::new(
        &[("c", 0), ("z1", 1), ("z2", 1)],
        &["z1", "z2", "c"],
        &["g1", "f1", "h1", "e1", "Q"],
    );
    let (c, z1, z2) = (pb.g("c"), pb.g("z1"), pb.g("z2"));
    // c^{-1} = g1 - c from c^2 - g1 c + 1 = 0
    let cinv = pb.s(pb.p("g1")).sub(&c, &pb.o);
    let z1p = cinv.scale(&pb.p("h1")).sub(&z1, &pb.o);
    let z2p = cinv.scale(&pb.p("f1")).sub(&z2, &pb.o);
    let r1 = pb.pow(&c, 2).sub(&c.scale(&pb.p("g1")), &pb.o).add(&pb.one(), &pb.o);
    let r2 = pb.mul(&[&z1, &c, &z1p]).sub(&cinv, &pb.o);
    let r3 = pb.mul(&[&z2p, &c, &z2]).sub(&cinv, &pb.o);
    let r4 = pb
        .mul(&[&z2p, &z1p])
        .scale(&pb.p("Q"))
        .add(&pb.mul(&[&z1, &c, &c, &z2]), &pb.o)
        .sub(&cinv.scale(&pb.p("e1")), &pb.o);
    let r5 = pb
        .mul(&[&c, &z2, &c, &z1, &c])
        .add(&pb.mul(&[&z1p, &c, &z2p]).scale(&pb.p("Q")), &pb.o)
        .sub(&pb.s(pb.p("e1")), &pb.o);
    pb.finish(
        "efficient_d4_z",
        vec![r1, r2, r3, r4, r5],
        "D4 in generators c, z1 = d c^{-1}, z2 = c^{-1} b; Q = q^2",
    )
}

fn graded_123(ty: DiagramType) -> Presentation {
    let ell = ty.ell();
    let gparams: Vec<String> = (1..ell).map(|k| format!("g{}", k)).collect();
    let mut params: Vec<&str> = gparams.iter().map(|s| s.as_str()).collect();
    params.push("q");
    let pb = Pb::new(&[("c", 0), ("d", 1)], &["c", "d"], &params);
    let (c, d) = (pb.g("c"), pb.g("d"));
    // c^ell - g1 c^{ell-1} + ... + (-1)^ell
    let mut rc = pb.pow(&c, ell);
    for k in 1..ell {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        rc = rc.add(
            &pb.pow(&c, ell - k).scale(&(pb.p(&format!("g{}", k)) * pb.int(sign))),
            &pb.o,
        );
    }
    let const_sign = if ell % 2 == 1 { -1 } else { 1 };
    rc = rc.add(&pb.one().scale(&pb.int(const_sign)), &pb.o);
    let mut rels = vec![rc];
    for i in 2..=ell.saturating_sub(2) {
        rels.push(pb.mul(&[&d, &pb.pow(&c, i), &d]));
    }
    // dcd - (-1)^ell q^{-ell} c d c^{ell-1} d c  (sign from the generator
    // rescaling of the efficient presentations)
    let q_inv_ell = pb
        .p("q")
        .inv_pow(ell)
        .expect("q is a unit parameter");
    let sign = if ell % 2 == 1 { -1 } else { 1 };
    let twist = pb.mul(&[&c, &d, &pb.pow(&c, ell - 1), &d, &c]).scale(&(q_inv_ell * pb.int(sign)));
    rels.push(pb.mul(&[&d, &c, &d]).sub(&twist, &pb.o));
    if ty == DiagramType::E6 {
        rels.push(pb.mul(&[&d, &c, &d, &c, &d]));
    }
    pb.finish(
        &format!("graded_123:{}", ty),
        rels,
        "graded presentation of the 123 filtration; d is the image of b c^{-1}",
    )
}

fn graded_112_d4() -> Presentation {
    let pb = Pb::new(
        &[("c", 0), ("z1", 1), ("z2", 1)],
        &["z1", "z2", "c"],
        &["u31", "u32", "q"],
    );
    let (c, z1, z2) = (pb.g("c"), pb.g("z1"), pb.g("z2"));
    let p_c = min_poly(&pb, &c, &[pb.p("u31"), pb.p("u32")]);
    let q2 = pb.p("q") * pb.p("q");
    let q2inv = q2.clone().inv_param();
    let r4 = pb
        .mul(&[&c, &z1, &c, &z2, &c])
        .sub(&pb.mul(&[&z2, &c, &z1]).scale(&q2), &pb.o);
    let r5 = pb
        .mul(&[&z1, &z2])
        .sub(&pb.mul(&[&z2, &c, &c, &z1]).scale(&q2inv), &pb.o);
    let rels = vec![
        p_c,
        pb.mul(&[&z1, &c, &z1]),
        pb.mul(&[&z2, &c, &z2]),
        r4,
        r5,
    ];
    pb.finish(
        "graded_112_D4",
        rels,
        "graded 112 presentation for D4; z1, z2 are the images of c^{-1} b and d c^{-1}",
    )
}

fn graded_111_d4() -> Presentation {
    let pb = Pb::new(
        &[("c", 0), ("w1", 1), ("w2", 1), ("w3", 1)],
        &["w1", "w2", "w3", "c"],
        &["u31", "u32", "q"],
    );
    let c = pb.g("c");
    let w: Vec<_> = (1..=3).map(|i| pb.g(&format!("w{}", i))).collect();
    let q2 = pb.p("q") * pb.p("q");
    let q2inv = q2.clone().inv_param();
    let mut rels = vec![min_poly(&pb, &c, &[pb.p("u31"), pb.p("u32")])];
    rels.push(pb.mul(&[&w[0], &w[2]]));
    rels.push(pb.mul(&[&w[0], &w[1]]));
    rels.push(pb.mul(&[&w[1], &w[2]]));
    rels.push(pb.mul(&[&w[2], &c, &c, &w[0]]));
    rels.push(pb.mul(&[&w[1], &c, &c, &w[0]]));
    rels.push(pb.mul(&[&w[2], &c, &c, &w[1]]));
    rels.push(pb.mul(&[&w[0], &c, &w[0]]));
    rels.push(pb.mul(&[&w[1], &c, &w[1]]));
    rels.push(pb.mul(&[&w[2], &c, &w[2]]));
    rels.push(
        pb.mul(&[&w[2], &c, &w[0]])
            .sub(&pb.mul(&[&c, &w[0], &c, &w[2], &c]).scale(&q2), &pb.o),
    );
    rels.push(
        pb.mul(&[&w[1], &c, &w[0]])
            .sub(&pb.mul(&[&c, &w[0], &c, &w[1], &c]).scale(&q2inv.clone()), &pb.o),
    );
    rels.push(
        pb.mul(&[&w[2], &c, &w[1]])
            .sub(&pb.mul(&[&c, &w[1], &c, &w[2], &c]).scale(&q2inv), &pb.o),
    );
    pb.finish(
        "graded_111_D4",
        rels,
        "graded 111 presentation for D4; w_i are the images of c^{-1} d^{-1}, d b, b^{-1} c^{-1}",
    )
}

fn graded_112_e6() -> Presentation {
    let pb = Pb::new(
        &[("c", 0), ("d", 1), ("e", 1)],
        &["d", "e", "c"],
        &["g1", "g2", "Q"],
    );
    let (c, d, e) = (pb.g("c"), pb.g("d"), pb.g("e"));
    let rc = pb
        .pow(&c, 3)
        .sub(&pb.pow(&c, 2).scale(&pb.p("g1")), &pb.o)
        .add(&c.scale(&pb.p("g2")), &pb.o)
        .sub(&pb.one(), &pb.o);
    let qinv = pb.p("Q").inv_param();
    let rels = vec![
        rc,
        pb.mul(&[&d, &c, &c, &d]),
        pb.mul(&[&d, &c, &d]),
        pb.mul(&[&d, &c, &e]),
        pb.mul(&[&e, &c, &d]),
        pb.mul(&[&e, &c, &e]),
        pb.mul(&[&e, &c, &c, &e]),
        pb.mul(&[&d, &e])
            .sub(&pb.mul(&[&e, &d]).scale(&pb.p("Q")), &pb.o)
            .sub(&pb.mul(&[&d, &c, &e]).scale(&pb.p("g2")), &pb.o),
        pb.mul(&[&d, &c, &e])
            .sub(&pb.mul(&[&c, &e, &c, &c, &d, &c]).scale(&qinv), &pb.o),
    ];
    pb.finish(
        "graded_112_E6",
        rels,
        "graded 112 presentation for E6 in d = b c^{-1}, e = c^{-1} b^{-1} c^{-1}; recorded as printed",
    )
}

fn group_b(ty: DiagramType) -> Presentation {
    let gen_names: Vec<String> = (1..=ty.m()).map(|k| format!("T{}", k)).collect();
    let gens: Vec<(&str, u32)> = gen_names.iter().map(|n| (n.as_str(), 1)).collect();
    let prec: Vec<&str> = gen_names.iter().map(|s| s.as_str()).collect();
    let pb = Pb::new(&gens, &prec, &["q"]);
    let mut rels = vec![];
    for (k, &d) in ty.legs().iter().enumerate() {
        let t = pb.g(&gen_names[k]);
        rels.push(pb.pow(&t, d).sub(&pb.one(), &pb.o));
    }
    let prod = pb.mul(&gen_names.iter().map(|n| pb.g(n)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    rels.push(prod.sub(&pb.s(pb.p("q")), &pb.o));
    pb.finish(
        &format!("group_B:{}", ty),
        rels,
        "twisted group algebra: T_k^{d_k} = 1, prod T_k = q",
    )
}

fn alt_group(ty: DiagramType) -> Presentation {
    let pb = Pb::new(
        &[("X", 1), ("Xi", 1), ("P", 1), ("Pi", 1), ("s", 1)],
        &["X", "Xi", "P", "Pi", "s"],
        &["q"],
    );
    let (x, xi, p, pi, s) = (pb.g("X"), pb.g("Xi"), pb.g("P"), pb.g("Pi"), pb.g("s"));
    let q = pb.p("q");
    let ell = ty.ell();
    let mut rels = vec![
        pb.mul(&[&x, &xi]).sub(&pb.one(), &pb.o),
        pb.mul(&[&xi, &x]).sub(&pb.one(), &pb.o),
        pb.mul(&[&p, &pi]).sub(&pb.one(), &pb.o),
        pb.mul(&[&pi, &p]).sub(&pb.one(), &pb.o),
        pb.pow(&s, ell).sub(&pb.one(), &pb.o),
    ];
    let q_ell = (0..ell).fold(pb.int(1), |acc, _| acc * q.clone());
    // PX = q^ell X P
    rels.push(pb.mul(&[&p, &x]).sub(&pb.mul(&[&x, &p]).scale(&q_ell), &pb.o));
    // conjugation relations, written as X s = s * w(X, P)
    let (im_x, im_p): (NcPoly<ParamRat>, NcPoly<ParamRat>) = match ty {
        DiagramType::D4 => (pb.mul(&[&s, &xi]), pb.mul(&[&s, &pi])),
        DiagramType::E6 => (
            pb.mul(&[&s, &pi, &xi]).scale(&q.clone().inv_param()),
            pb.mul(&[&s, &x]).scale(&(q.clone() * q.clone())),
        ),
        DiagramType::E7 => (
            pb.mul(&[&s, &pi]).scale(&(q.clone() * q.clone()).inv_param()),
            pb.mul(&[&s, &x]).scale(&(q.clone() * q.clone())),
        ),
        DiagramType::E8 => (
            pb.mul(&[&s, &x, &pi]).scale(&(q.clone() * q.clone()).inv_param()),
            pb.mul(&[&s, &x]).scale(&q.clone()),
        ),
    };
    rels.push(pb.mul(&[&x, &s]).sub(&im_x, &pb.o));
    rels.push(pb.mul(&[&p, &s]).sub(&im_p, &pb.o));
    pb.finish(
        &format!("alt_group:{}", ty),
        rels,
        "alternative generators X, P, s of B(q) with conjugation relations",
    )
}

fn additive_k(ty: DiagramType) -> Presentation {
    let gen_names: Vec<String> = (1..=ty.m()).map(|k| format!("U{}", k)).collect();
    let gens: Vec<(&str, u32)> = gen_names.iter().map(|n| (n.as_str(), 1)).collect();
    let prec: Vec<&str> = gen_names.iter().map(|s| s.as_str()).collect();
    let mut params = vec!["mu0".to_string()];
    for (k, &d) in ty.legs().iter().enumerate() {
        for i in 1..d {
            params.push(format!("mu{}_{}", k + 1, i));
        }
    }
    let params_ref: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
    let pb = Pb::new(&gens, &prec, &params_ref);
    let mut rels = vec![];
    for (k, &d) in ty.legs().iter().enumerate() {
        let u = pb.g(&gen_names[k]);
        let mut roots = vec![pb.int(0)];
        let mut acc = pb.int(0);
        for i in 1..d {
            acc = acc + pb.p(&format!("mu{}_{}", k + 1, i));
            roots.push(acc.clone());
        }
        rels.push(min_poly(&pb, &u, &roots));
    }
    let sum = pb.sum(&gen_names.iter().map(|n| pb.g(n)).collect::<Vec<_>>());
    rels.push(sum.add(&pb.s(pb.p("mu0")), &pb.o));
    pb.finish(
        &format!("additive_K:{}", ty),
        rels,
        "nodal corner of the deformed preprojective algebra: U_k spectra are partial mu sums",
    )
}

fn gamma_plus(ty: DiagramType) -> Presentation {
    let pb = Pb::new(&[("a", 1), ("b", 1), ("c", 1)], &["a", "b", "c"], &[]);
    let (a, b, c) = (pb.g("a"), pb.g("b"), pb.g("c"));
    let (na, nb, nc) = match ty {
        DiagramType::D4 => (2, 2, 2),
        DiagramType::E6 => (3, 3, 2),
        DiagramType::E7 => (2, 4, 3),
        DiagramType::E8 => (2, 3, 5),
    };
    let rels = vec![
        pb.pow(&a, na).sub(&pb.one(), &pb.o),
        pb.pow(&b, nb).sub(&pb.one(), &pb.o),
        pb.pow(&c, nc).sub(&pb.one(), &pb.o),
        pb.mul(&[&a, &b, &c]).sub(&pb.one(), &pb.o),
    ];
    pb.finish(
        &format!("gamma_plus:{}", ty),
        rels,
        "the McKay group modulo its center",
    )
}

fn leg_a(m: usize) -> Presentation {
    let mut names: Vec<String> = vec![];
    for i in 1..m {
        names.push(format!("a{}", i));
        names.push(format!("s{}", i)); // a_i^*
    }
    let gens: Vec<(&str, u32)> = names.iter().map(|n| (n.as_str(), 1)).collect();
    let prec: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let params: Vec<String> = (1..=m).map(|i| format!("q{}", i)).collect();
    let params_ref: Vec<&str> = params.iter().map(|s| s.as_str()).collect();
    let pb = Pb::new(&gens, &prec, &params_ref);
    let mut rels = vec![];
    // 1 + a1* a1 = q1
    let a = |i: usize| pb.g(&format!("a{}", i));
    let st = |i: usize| pb.g(&format!("s{}", i));
    rels.push(
        pb.one()
            .add(&pb.mul(&[&st(1), &a(1)]), &pb.o)
            .sub(&pb.s(pb.p("q1")), &pb.o),
    );
    for i in 1..m - 1 {
        // q_{i+1} (1 + a_{i+1}^* a_{i+1}) = 1 + a_i a_i^*
        let lhs = pb
            .one()
            .add(&pb.mul(&[&st(i + 1), &a(i + 1)]), &pb.o)
            .scale(&pb.p(&format!("q{}", i + 1)));
        let rhs = pb.one().add(&pb.mul(&[&a(i), &st(i)]), &pb.o);
        rels.push(lhs.sub(&rhs, &pb.o));
    }
    // q_m = 1 + a_{m-1} a_{m-1}^*
    let rhs = pb.one().add(&pb.mul(&[&a(m - 1), &st(m - 1)]), &pb.o);
    rels.push(pb.s(pb.p(&format!("q{}", m))).sub(&rhs, &pb.o));
    pb.finish(
        &format!("legA:{}", m),
        rels,
        "type-A leg relations of the multiplicative preprojective algebra",
    )
}

fn coxeter_deformed(ty: DiagramType) -> Presentation {
    let m = ty.m();
    let gen_names: Vec<String> = (1..=m).map(|k| format!("s{}", k)).collect();
    let gens: Vec<(&str, u32)> = gen_names.iter().map(|n| (n.as_str(), 1)).collect();
    let prec: Vec<&str> = gen_names.iter().map(|s| s.as_str()).collect();
    let mut params = param_names_u(ty, true);
    let params_ref: Vec<&str> = {
        params.push("qinv".to_string());
        params.iter().map(|s| s.as_str()).collect()
    };
    let pb = Pb::new(&gens, &prec, &params_ref);
    let mut rels = vec![];
    for name in &gen_names {
        let s = pb.g(name);
        rels.push(pb.pow(&s, 2).sub(&pb.one(), &pb.o));
    }
    // Balanced deformed braid relation for each cyclic pair (k, k+1):
    // from prod_j (x - q^{-delta} u_kj) = 0 with x = s_k s_{k+1}, multiply by
    // x^{-floor(d/2)}; negative powers are words in s_{k+1} s_k.
    for k in 0..m {
        let d = ty.legs()[k] as i64;
        let sk = pb.g(&gen_names[k]);
        let sk1 = pb.g(&gen_names[(k + 1) % m]);
        let qfac = if k + 1 == m { pb.p("qinv") } else { pb.int(1) };
        let e = d / 2;
        let mut rel = NcPoly::<ParamRat>::zero();
        for i in 0..=d {
            // coefficient (-1)^i e_i({q^{-delta} u_kj}) on x^{d-i-e}
            let mut coeff = pb.int(if i % 2 == 0 { 1 } else { -1 });
            // elementary symmetric e_i of the d parameters, each times qfac
            let subsets = combinations(d as usize, i as usize);
            let mut esym = pb.int(0);
            for sub in subsets {
                let mut term = pb.int(1);
                for j in sub {
                    term = term * pb.p(&format!("u{}{}", k + 1, j + 1)) * qfac.clone();
                }
                esym = esym + term;
            }
            coeff = coeff * esym;
            let exp = d - i - e;
            let word = if exp >= 0 {
                let mut w = pb.one();
                for _ in 0..exp {
                    w = w.mul(&sk, &pb.o).mul(&sk1, &pb.o);
                }
                w
            } else {
                let mut w = pb.one();
                for _ in 0..(-exp) {
                    w = w.mul(&sk1, &pb.o).mul(&sk, &pb.o);
                }
                w
            };
            rel = rel.add(&word.scale(&coeff), &pb.o);
        }
        rels.push(rel);
    }
    pb.finish(
        &format!("coxeter:{}", ty),
        rels,
        "deformed Coxeter presentation carrying the length filtration, braid relations balanced",
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// ParamRat helpers used by the builders.
trait ParamRatExt {
    fn inv_param(self) -> ParamRat;
    fn inv_pow(&self, k: u32) -> Option<ParamRat>;
}

impl ParamRatExt for ParamRat {
    fn inv_param(self) -> ParamRat {
        use crate::exactnum::Field;
        self.inv().expect("parameter is a unit")
    }

    fn inv_pow(&self, k: u32) -> Option<ParamRat> {
        use crate::exactnum::Field;
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc * self.clone();
        }
        acc.inv()
    }
}

/// Specializes a preset at a torus point, routing the parameter dictionary.
pub fn specialize_preset(
    key: PresetKey,
    tp: &super::TorusParams,
) -> Result<super::SpecPresentation, CatalogError> {
    use super::{param_map, SpecPresentation};
    use crate::exactnum::Cyclo;
    use std::collections::BTreeMap;
    let pres = presentation(key)?;
    let mut vals: BTreeMap<String, Cyclo> = BTreeMap::new();
    match key {
        PresetKey::Defining(ty) => {
            assert_eq!(ty, tp.ty);
            for (k, leg) in tp.u.iter().enumerate() {
                for (j, u) in leg.iter().enumerate() {
                    vals.insert(format!("u{}{}", k + 1, j + 1), u.clone());
                }
            }
            vals.insert("q".into(), tp.q.clone());
        }
        PresetKey::Efficient(ty) => {
            assert_eq!(ty, tp.ty);
            vals = param_map(tp)?.values;
        }
        PresetKey::EfficientE8D => {
            assert_eq!(tp.ty, DiagramType::E8);
            vals = param_map(tp)?.values;
        }
        PresetKey::EfficientD4Z => {
            assert_eq!(tp.ty, DiagramType::D4);
            vals = param_map(tp)?.values;
        }
        PresetKey::Graded123(ty) => {
            assert_eq!(ty, tp.ty);
            let eff = param_map(tp)?;
            for (k, v) in eff.values.iter() {
                if k.starts_with('g') {
                    vals.insert(k.clone(), v.clone());
                }
            }
            vals.insert("q".into(), tp.q.clone());
        }
        PresetKey::Graded112D4 | PresetKey::Graded111D4 => {
            assert_eq!(tp.ty, DiagramType::D4);
            vals.insert("u31".into(), tp.u[2][0].clone());
            vals.insert("u32".into(), tp.u[2][1].clone());
            vals.insert("q".into(), tp.q.clone());
        }
        PresetKey::Graded112E6 => {
            assert_eq!(tp.ty, DiagramType::E6);
            let eff = param_map(tp)?;
            vals.insert("g1".into(), eff.get("g1"));
            vals.insert("g2".into(), eff.get("g2"));
            vals.insert("Q".into(), eff.get("Q"));
        }
        PresetKey::GroupB(_) | PresetKey::AltGroup(_) => {
            vals.insert("q".into(), tp.q.clone());
        }
        PresetKey::Coxeter(ty) => {
            assert_eq!(ty, tp.ty);
            for (k, leg) in tp.u.iter().enumerate() {
                for (j, u) in leg.iter().enumerate() {
                    vals.insert(format!("u{}{}", k + 1, j + 1), u.clone());
                }
            }
            vals.insert("q".into(), tp.q.clone());
            vals.insert(
                "qinv".into(),
                crate::exactnum::Field::inv(&tp.q).expect("q invertible"),
            );
        }
        PresetKey::AdditiveK(_) | PresetKey::GammaPlus(_) | PresetKey::LegA(_) => {
            return Err(CatalogError::UnknownKey(format!(
                "{} takes direct parameter values, not a torus point",
                key.name()
            )));
        }
    }
    let sp: SpecPresentation = pres.specialize(&vals)?;
    Ok(sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sample_torus, SamplerConfig, TorusParams};
    use crate::exactnum::{rat, Cyclo};
    use crate::rewrite::Completeness;
    use num_traits::{One, Zero};

    #[test]
    fn keys_parse_and_list() {
        for key in PresetKey::list() {
            let name = key.name();
            assert_eq!(PresetKey::parse(&name), Some(key), "round trip {}", name);
            presentation(key).unwrap();
        }
    }

    #[test]
    fn e6_specialized_leads_match_paper() {
        let tp = sample_torus(DiagramType::E6, Cyclo::from_rat_val(rat(2, 1)), 1, &SamplerConfig::default());
        let sp = specialize_preset(PresetKey::Efficient(DiagramType::E6), &tp).unwrap();
        let rs = sp.complete(12).unwrap();
        assert_eq!(rs.completeness, Completeness::Complete);
        let mut leads = rs.lead_strings();
        leads.sort();
        assert_eq!(leads, vec!["b^2c^2", "b^3", "bcbc", "c^3"]);
    }

    #[test]
    fn d4_group_point_params_vanish() {
        let tp = TorusParams::group_point(DiagramType::D4, Cyclo::one());
        let eff = crate::catalog::param_map(&tp).unwrap();
        for k in ["g1", "f1", "h1", "e1"] {
            assert!(eff.get(k).is_zero(), "{} should vanish at t = 1, q = 1", k);
        }
        assert!(eff.get("Q").is_one());
    }
}
