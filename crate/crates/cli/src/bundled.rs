//! Example specs shipped inside the binary, addressed as `bundled:NAME`.

pub const BUNDLED: &[(&str, &str)] = &[
    ("o3_o2", include_str!("../specs/o3_o2.spec")),
    ("suspension_su2", include_str!("../specs/suspension_su2.spec")),
    ("sp2", include_str!("../specs/sp2.spec")),
    ("su3_s7", include_str!("../specs/su3_s7.spec")),
    ("su3_self", include_str!("../specs/su3_self.spec")),
    ("so3_rp3", include_str!("../specs/so3_rp3.spec")),
    ("s4_oddodd", include_str!("../specs/s4_oddodd.spec")),
    ("u2_oddeven", include_str!("../specs/u2_oddeven.spec")),
    ("torus_flip", include_str!("../specs/torus_flip.spec")),
    ("synthetic_k2", include_str!("../specs/synthetic_k2.spec")),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}
