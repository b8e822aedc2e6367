use serde::{Deserialize, Serialize};

use super::{Complex, OrientedComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SphereStatus {
    /// Recognised exactly (dimension at most 2).
    Sphere,
    NotSphere,
    /// Every necessary condition holds; recognition is not attempted in
    /// dimension 3 and above.
    NecessaryConditionsOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereVerdict {
    pub status: SphereStatus,
    pub checks: Vec<(String, bool)>,
}

impl SphereVerdict {
    /// True unless some check failed.
    pub fn passed(&self) -> bool {
        self.status != SphereStatus::NotSphere
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name.as_str())
    }
}

pub fn is_sphere(complex: &Complex) -> SphereVerdict {
    let n = complex.dimension();
    let mut checks = Vec::new();

    if n == 0 {
        checks.push(("two points".to_string(), complex.vertex_count() == 2));
        return finish(0, checks);
    }

    let report = complex.check_closed_pseudomanifold();
    checks.push((
        "every ridge in exactly two facets".to_string(),
        report.bad_ridges.is_empty(),
    ));
    checks.push(("facet graph connected".to_string(), report.components == 1));
    if !report.passed() {
        return finish(n, checks);
    }
    if n == 1 {
        // a closed connected 1-pseudomanifold is a single cycle
        return finish(n, checks);
    }

    checks.push((
        "orientable".to_string(),
        OrientedComplex::orient(complex.clone()).is_ok(),
    ));
    let expected_chi = if n.is_multiple_of(2) { 2 } else { 0 };
    checks.push((
        format!("euler characteristic {expected_chi}"),
        complex.euler_characteristic() == expected_chi,
    ));

    let mut bad_links = Vec::new();
    for &v in complex.vertices() {
        let link = complex.vertex_link(v).expect("vertex of the complex");
        if !is_sphere(&link).passed() {
            bad_links.push(v);
        }
    }
    let link_check = if n == 2 {
        "vertex links are cycles".to_string()
    } else {
        format!("vertex links pass the {}-sphere checks", n - 1)
    };
    checks.push((
        if bad_links.is_empty() {
            link_check
        } else {
            format!("{link_check} (fails at {bad_links:?})")
        },
        bad_links.is_empty(),
    ));
    finish(n, checks)
}

fn finish(n: usize, checks: Vec<(String, bool)>) -> SphereVerdict {
    let status = if checks.iter().any(|(_, ok)| !ok) {
        SphereStatus::NotSphere
    } else if n <= 2 {
        SphereStatus::Sphere
    } else {
        SphereStatus::NecessaryConditionsOnly
    };
    SphereVerdict { status, checks }
}
