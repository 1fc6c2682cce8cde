use std::collections::BTreeMap;

use crate::steinberg::FiniteGroupoid;

use super::{Graph, InstanceError};

/// Boundary paths end at a sink; `(x, m, y)` joins two with the same sink and
/// `m = |x| - |y|`.
pub fn boundary_path_groupoid(graph: &Graph) -> Result<FiniteGroupoid, InstanceError> {
    let longest = graph.longest_path().ok_or_else(|| {
        InstanceError::Unsupported("boundary-path groupoid needs an acyclic graph".into())
    })?;
    let mut classes: BTreeMap<usize, Vec<(String, i64)>> = BTreeMap::new();
    for p in graph.paths(longest) {
        let tail = graph.path_source(&p);
        if graph.is_sink(tail) {
            classes
                .entry(tail)
                .or_default()
                .push((graph.path_name(&p), Graph::path_len(&p) as i64));
        }
    }
    Ok(FiniteGroupoid::pair_classes(classes.into_values().collect())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_star_arrows() {
        let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
        assert_eq!(g.len(), 25);
        assert_eq!(g.units().len(), 5);
        assert_eq!(g.degree_set(1).len(), 6);
        assert!(g.arrow_index("(ef,2,v)").is_some());
    }

    #[test]
    fn single_vertex() {
        let g = boundary_path_groupoid(&Graph::new(&["a"], &[]).unwrap()).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn cyclic_graph_is_unsupported() {
        let graph = Graph::new(&["a"], &[("x", "a", "a")]).unwrap();
        assert!(matches!(
            boundary_path_groupoid(&graph),
            Err(InstanceError::Unsupported(_))
        ));
    }
}
