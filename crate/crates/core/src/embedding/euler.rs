use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{faces::trace_faces, is_orientable_map, CombinatorialMap, EmbeddingError, FaceSet};
use crate::scalar::ExactScalar;
use crate::surfaces::{Surface, SurfaceKind};

/// Surface data and Euler contributions of one embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport<T = Rational64> {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub orientable: bool,
    /// g when orientable, ḡ otherwise.
    pub genus: i64,
    pub phi: Vec<T>,
    pub phi_sum: T,
    /// Vertices with φ(v) ≥ χ/|V|, increasing.
    pub control_points: Vec<usize>,
}

impl<T: ExactScalar> EulerReport<T> {
    pub fn surface(&self) -> Surface {
        let kind = if self.orientable { SurfaceKind::Orientable } else { SurfaceKind::NonOrientable };
        Surface::new(kind, self.genus as u32).expect("traced maps live on valid surfaces")
    }

    /// Σφ(v) = χ.
    pub fn conserves_characteristic(&self) -> bool {
        T::from_int(self.chi).is_some_and(|chi| chi == self.phi_sum)
    }

    /// The threshold χ/|V| that defines control points.
    pub fn control_threshold(&self) -> Option<T> {
        T::from_fraction(self.chi, self.vertices as i64)
    }
}

impl<T: ExactScalar> Serialize for EulerReport<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EulerReport", 9)?;
        s.serialize_field("vertices", &self.vertices)?;
        s.serialize_field("edges", &self.edges)?;
        s.serialize_field("faces", &self.faces)?;
        s.serialize_field("chi", &self.chi)?;
        s.serialize_field("orientable", &self.orientable)?;
        s.serialize_field("genus", &self.genus)?;
        let phi: Vec<String> = self.phi.iter().map(|p| p.to_string()).collect();
        s.serialize_field("phi", &phi)?;
        s.serialize_field("phi_sum", &self.phi_sum.to_string())?;
        s.serialize_field("control_points", &self.control_points)?;
        s.end()
    }
}

fn overflow<T>(x: Option<T>) -> Result<T, EmbeddingError> {
    x.ok_or(EmbeddingError::ArithmeticOverflow)
}

/// φ(v) = 1 − deg(v)/2 + Σ 1/fᵢ over the corners at `v`.
pub(crate) fn contribution_from_faces<T: ExactScalar>(
    faces: &FaceSet,
    degree: usize,
    v: usize,
) -> Result<T, EmbeddingError> {
    let mut phi = overflow(T::from_fraction(2 - degree as i64, 2))?;
    for size in faces.corner_sizes(v) {
        let term = overflow(T::from_fraction(1, size as i64))?;
        phi = overflow(phi.checked_add(&term))?;
    }
    Ok(phi)
}

pub fn euler_contribution<T: ExactScalar>(
    map: &CombinatorialMap,
    v: usize,
) -> Result<T, EmbeddingError> {
    let n = map.vertex_count();
    if v >= n {
        return Err(EmbeddingError::VertexOutOfRange { vertex: v, n });
    }
    let faces = trace_faces(map)?;
    contribution_from_faces(&faces, map.graph().degree(v), v)
}

pub fn euler_report<T: ExactScalar>(map: &CombinatorialMap) -> Result<EulerReport<T>, EmbeddingError> {
    let faces = trace_faces(map)?;
    let g = map.graph();
    let (nv, ne, nf) = (g.vertex_count(), g.edge_count(), faces.len());
    let chi = nv as i64 - ne as i64 + nf as i64;
    let orientable = is_orientable_map(map)?;
    let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };

    let phi = (0..nv)
        .map(|v| contribution_from_faces::<T>(&faces, g.degree(v), v))
        .collect::<Result<Vec<_>, _>>()?;
    let mut phi_sum = T::zero();
    for p in &phi {
        phi_sum = overflow(phi_sum.checked_add(p))?;
    }
    let threshold = overflow(T::from_fraction(chi, nv as i64))?;
    let control_points = (0..nv).filter(|&v| phi[v] >= threshold).collect();

    let report = EulerReport { vertices: nv, edges: ne, faces: nf, chi, orientable, genus, phi, phi_sum, control_points };
    debug_assert!(report.conserves_characteristic());
    debug_assert!(!orientable || chi % 2 == 0);
    Ok(report)
}

pub(crate) fn corner_count_from_faces(faces: &FaceSet, v: usize) -> (usize, usize) {
    let sizes = faces.corner_sizes(v);
    (sizes.iter().filter(|&&s| s == 3).count(), sizes.len())
}

/// `(x, y)`: the number of triangular corners at `v` and its degree.
pub fn triangular_corner_count(
    map: &CombinatorialMap,
    v: usize,
) -> Result<(usize, usize), EmbeddingError> {
    let n = map.vertex_count();
    if v >= n {
        return Err(EmbeddingError::VertexOutOfRange { vertex: v, n });
    }
    let faces = trace_faces(map)?;
    Ok(corner_count_from_faces(&faces, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};
    use num_bigint::BigInt;
    use num_rational::{BigRational, Ratio};

    fn k4_planar() -> CombinatorialMap {
        let k4 = generate_family(&Family::Complete(4)).unwrap();
        let rot = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        CombinatorialMap::new(k4, rot, &[]).unwrap()
    }

    #[test]
    fn k4_report() {
        let r: EulerReport = euler_report(&k4_planar()).unwrap();
        assert_eq!((r.chi, r.orientable, r.genus, r.faces), (2, true, 0, 4));
        assert!(r.phi.iter().all(|p| *p == Rational64::new(1, 2)));
        assert_eq!(r.control_points, vec![0, 1, 2, 3]);
        assert!(r.conserves_characteristic());
        assert_eq!(r.surface(), Surface::sphere());
    }

    #[test]
    fn contribution_formula_direct() {
        // Degree 5 with corner faces (3,3,4,4,5).
        let faces = FaceSet {
            faces: [3, 3, 4, 4, 5]
                .iter()
                .map(|&k| super::super::Face { walk: vec![0; k] })
                .collect(),
            corners: vec![vec![0, 1, 2, 3, 4]],
        };
        let phi: Rational64 = contribution_from_faces(&faces, 5, 0).unwrap();
        assert_eq!(phi, Rational64::new(-2, 15));
        let big: BigRational = contribution_from_faces(&faces, 5, 0).unwrap();
        assert_eq!(big, Ratio::new(BigInt::from(-2), BigInt::from(15)));
    }

    #[test]
    fn corner_counts() {
        assert_eq!(triangular_corner_count(&k4_planar(), 2), Ok((3, 3)));
        let c4 = CombinatorialMap::natural(generate_family(&Family::Cycle(4)).unwrap());
        assert_eq!(triangular_corner_count(&c4, 0), Ok((0, 2)));
        assert!(matches!(
            triangular_corner_count(&c4, 9),
            Err(EmbeddingError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn narrow_scalars_report_overflow() {
        // Petersen on the natural rotation has long faces; i8 denominators
        // cannot hold their sums.
        let pet = CombinatorialMap::natural(generate_family(&Family::Petersen).unwrap());
        let wide: EulerReport = euler_report(&pet).unwrap();
        assert!(wide.conserves_characteristic());
        let narrow = euler_report::<Ratio<i8>>(&pet);
        match narrow {
            Err(EmbeddingError::ArithmeticOverflow) => {}
            Ok(r) => assert!(r.conserves_characteristic()),
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn report_json_is_stable() {
        let r: EulerReport = euler_report(&k4_planar()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":4,"edges":6,"faces":4,"chi":2,"orientable":true,"genus":0,"phi":["1/2","1/2","1/2","1/2"],"phi_sum":"2","control_points":[0,1,2,3]}"#
        );
    }
}
