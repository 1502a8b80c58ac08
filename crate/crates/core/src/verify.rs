//! Verification checklists for grid models against a target graph.

use crate::graph::Graph;
use crate::grid::GridModel;
use crate::transforms::epr_to_ca;

/// One pass/fail line of a checklist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checklist {
    pub items: Vec<CheckItem>,
}

impl Checklist {
    pub fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name,
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

/// What to check besides graph equality.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Requirements {
    pub max_bends: Option<usize>,
    pub epr: bool,
    /// Read the model back as arcs and require a normal Helly model.
    pub nh: bool,
}

/// Checks a grid model against the graph it should represent.
pub fn check_grid_model(model: &GridModel, target: &Graph, req: Requirements) -> Checklist {
    let mut list = Checklist::default();
    let got = model.epg_intersection_graph();
    let diff = got.edge_difference(target);
    let same_vertices = got.order() == target.order() && got.ids().iter().all(|id| target.index_of(id).is_some());
    let equal = got == *target;
    let detail = if equal {
        format!("{} vertices, {} edges", got.order(), got.size())
    } else if !same_vertices {
        "vertex sets differ".to_owned()
    } else {
        let shown: Vec<String> = diff.iter().take(5).map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{} edges differ: {}", diff.len(), shown.join(", "))
    };
    list.push("graph-equality", equal, detail);

    let bends = model.max_bends();
    if let Some(k) = req.max_bends {
        list.push("bend-bound", bends <= k, format!("max bends {bends}, bound {k}"));
    }
    if req.epr {
        let violation = model.epr_violation();
        let detail = violation.clone().unwrap_or_else(|| "all edges on the rectangle boundary".into());
        list.push("epr-validity", violation.is_none(), detail);
    }
    if req.nh {
        match epr_to_ca(model) {
            Ok(arcs) => {
                let nh = arcs.is_normal_helly();
                let same = arcs.intersection_graph() == got;
                list.push(
                    "nh-validity",
                    nh && same,
                    if !same {
                        "arc model disagrees with the grid model".to_owned()
                    } else if nh {
                        "arc model is normal Helly".to_owned()
                    } else {
                        "arc model has a covering of at most three arcs".to_owned()
                    },
                );
            }
            Err(e) => list.push("nh-validity", false, e.to_string()),
        }
    }
    list
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{pt, GridPath, Rect};

    #[test]
    fn failing_items_are_reported() {
        let m = GridModel::new(
            vec![
                GridPath::new("a", vec![pt(0, 0), pt(0, 2), pt(1, 2)]).unwrap(),
                GridPath::new("b", vec![pt(1, 0), pt(1, 2)]).unwrap(),
            ],
            Some(Rect::new(0, 2, 0, 2).unwrap()),
        )
        .unwrap();
        let target = Graph::from_edges(&["a", "b"], &[("a", "b")]).unwrap();
        let list = check_grid_model(
            &m,
            &target,
            Requirements {
                max_bends: Some(0),
                epr: true,
                nh: true,
            },
        );
        assert!(!list.get("graph-equality").unwrap().passed);
        assert!(!list.get("bend-bound").unwrap().passed);
        assert!(!list.get("epr-validity").unwrap().passed);
        assert!(!list.get("nh-validity").unwrap().passed);
        assert!(!list.all_passed());
    }
}
