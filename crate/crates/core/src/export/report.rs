use serde::Serialize;

use crate::analysis::{
    ambient_is_full_stabilizer, face_stabilizer_check, no_antipodal_edges, petrie_symmetry_preserved, symmetry_group,
    vertex_rotation_check, SymmetryReport,
};
use crate::enumerator::{Family, FamilyRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the full invariant suite for one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub family: String,
    #[serde(rename = "type")]
    pub schlafli_type: String,
    pub passed: bool,
    pub record: FamilyRecord,
    pub symmetry: SymmetryReport,
    pub checks: Vec<CheckResult>,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name, passed, detail: detail.into() }
}

pub fn verify_family(family: &Family) -> VerifyReport {
    let p = &family.polyhedron;
    let r = &family.report;
    let c = p.complex();
    let (_, f1, _) = c.face_vector();
    let sym = symmetry_group(p);
    let mut checks = vec![
        check(
            "index-2",
            r.index == Some(2) && r.group_order == 2 * f1 && r.automorphism_order == 4 * f1,
            format!("|G| = {}, |Γ| = {}, f1 = {f1}", r.group_order, r.automorphism_order),
        ),
        check(
            "orbits",
            [r.under_group.flags, r.under_group.vertices, r.under_group.edges, r.under_group.faces] == [2, 2, 1, 1],
            format!(
                "flags {}, vertices {}, edges {}, faces {}",
                r.under_group.flags, r.under_group.vertices, r.under_group.edges, r.under_group.faces
            ),
        ),
        check("regular", c.is_regular(), format!("{} flags", c.flag_count())),
        check("orientable", c.is_orientable(), format!("genus {}", family.record.genus)),
        check("ambient-group", ambient_is_full_stabilizer(p.frame()), r.ambient.clone()),
    ];
    checks.push(match face_stabilizer_check(p, &sym) {
        Ok(_) => check("face-stabilizers", true, "dihedral of order p, mirrors through opposite vertices"),
        Err(s) => check("face-stabilizers", false, format!("{s:?}")),
    });
    checks.push(match no_antipodal_edges(p) {
        Ok(()) => check("no-antipodal-edges", true, ""),
        Err([a, b]) => check("no-antipodal-edges", false, format!("edge {a}-{b}")),
    });
    checks.push(match vertex_rotation_check(p, &sym) {
        Ok(()) => check("vertex-rotations", true, ""),
        Err(v) => check("vertex-rotations", false, format!("vertex {v}")),
    });
    if let Some(same) = petrie_symmetry_preserved(p, &sym) {
        checks.push(check("petrie-symmetry", same, "G(P) equals G of the Petrie-dual"));
    }
    if let Some(name) = &family.record.generator {
        let ok = family.doubling_verified == Some(true);
        checks.push(check("doubling", ok, format!("isomorphic to the doubled {name}")));
    }
    VerifyReport {
        family: family.record.family_id.clone(),
        schlafli_type: family.record.schlafli_type.clone(),
        passed: checks.iter().all(|c| c.passed),
        record: family.record.clone(),
        symmetry: r.clone(),
        checks,
    }
}
