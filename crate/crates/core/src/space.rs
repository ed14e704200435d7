use serde::{Deserialize, Serialize};

/// A finite-dimensional vector space with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSpace {
    labels: Vec<String>,
}

impl LabeledSpace {
    /// Fails on duplicate labels.
    pub fn new(labels: Vec<String>) -> Result<Self, String> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(format!("duplicate basis label `{l}`"));
            }
        }
        Ok(LabeledSpace { labels })
    }

    /// Basis `prefix0, prefix1, …`.
    pub fn numbered(prefix: &str, dim: usize) -> Self {
        LabeledSpace {
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn from_strs(labels: &[&str]) -> Self {
        Self::new(labels.iter().map(|s| s.to_string()).collect()).expect("distinct labels")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Basis `x*y` of the tensor product, left factor slowest. Compound
    /// labels are parenthesised so that nested products stay unambiguous.
    pub fn tensor(&self, other: &LabeledSpace) -> LabeledSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for x in &self.labels {
            for y in &other.labels {
                labels.push(format!("{}*{}", wrap(x), wrap(y)));
            }
        }
        LabeledSpace { labels }
    }

    /// Direct sum; each summand's labels get the prefix `tag:`.
    pub fn direct_sum(parts: &[(String, LabeledSpace)]) -> LabeledSpace {
        let labels = parts
            .iter()
            .flat_map(|(tag, s)| s.labels.iter().map(move |l| format!("{tag}:{l}")))
            .collect();
        LabeledSpace { labels }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn wrap(label: &str) -> String {
    if label.contains('*') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Label of `x ⊗ y` as used in structure files.
pub fn tensor_label(x: &str, y: &str) -> String {
    format!("{}*{}", wrap(x), wrap(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_labels_are_unambiguous() {
        let a = LabeledSpace::from_strs(&["e", "g"]);
        let ab = a.tensor(&a);
        assert_eq!(ab.labels(), &["e*e", "e*g", "g*e", "g*g"]);
        let abc = ab.tensor(&a);
        assert_eq!(abc.labels()[1], "(e*e)*g");
        assert!(LabeledSpace::new(vec!["x".into(), "x".into()]).is_err());
    }
}
