//! Canonical complexes shipped with the crate.

use crate::io::{parse_complex, NamedComplex};

macro_rules! fixture {
    ($name:ident, $file:literal) => {
        pub fn $name() -> NamedComplex {
            parse_complex(include_str!(concat!("../fixtures/", $file)))
                .expect(concat!("bundled fixture ", $file))
        }
    };
}

fixture!(oct, "oct.json");
fixture!(cross4, "cross4.json");
fixture!(fan4, "fan4.json");
fixture!(dunce, "dunce.json");
fixture!(ball10, "ball10.json");
fixture!(c3, "c3.json");
fixture!(c4, "c4.json");
fixture!(edge, "edge.json");
fixture!(path3, "path3.json");

pub fn all() -> Vec<NamedComplex> {
    vec![oct(), cross4(), fan4(), dunce(), ball10(), c3(), c4(), edge(), path3()]
}

pub fn by_name(name: &str) -> Option<NamedComplex> {
    all().into_iter().find(|c| c.name.eq_ignore_ascii_case(name))
}

/// The 1-dimensional fixtures.
pub fn graphs() -> Vec<NamedComplex> {
    vec![c3(), c4(), edge(), path3()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dunce_transcription_invariants() {
        let d = dunce().complex;
        assert_eq!(d.facets().len(), 17);
        assert_eq!(d.num_vertices(), 8);
        // every edge lies in at least two triangles, so there is no free face
        for e in d.faces(1).unwrap() {
            let n = d.facets().iter().filter(|f| e.iter().all(|v| f.contains(v))).count();
            assert!(n >= 2, "edge {:?} is free", d.label_face(e));
        }
        assert!(d.homology().ranks.iter().all(|&b| b == 0));
    }

    #[test]
    fn ball10_is_stanley_reisner_complex_of_its_ideal() {
        let b = ball10().complex;
        assert_eq!(b.dim(), 4);
        let gens = crate::algebra::stanley_reisner_generators(&b);
        let shown: Vec<String> = gens.generators.iter().map(ToString::to_string).collect();
        let mut expected: Vec<String> = ["x1*x4", "x1*x5", "x2*x4", "x2*x5", "x3*x4", "x3*x5", "x4*x5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        expected.extend((1..=5).map(|i| format!("x{i}*x{}", i + 5)));
        let mut sorted = shown.clone();
        sorted.sort();
        expected.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn cross4_ideal() {
        let gens = crate::algebra::stanley_reisner_generators(&cross4().complex);
        let shown: Vec<String> = gens.generators.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["x1*x2", "x3*x4", "x5*x6", "x7*x8"]);
    }
}
