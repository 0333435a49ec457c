use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::category::{FinCategory, FincatError, MorphismData};

/// Versioned on-disk form of a finite category.
///
/// `compose[g][f]` is the index of g ∘ f, or null when the pair is not
/// composable.
#[derive(Debug, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub version: u32,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

pub fn category_to_json(cat: &FinCategory) -> String {
    let n = cat.morphism_count();
    let mut compose = vec![vec![None; n]; n];
    for g in 0..n {
        for f in 0..n {
            compose[g][f] = cat.compose(g, f);
        }
    }
    let doc = CategoryDoc {
        version: 1,
        objects: cat.objects().to_vec(),
        morphisms: (0..n)
            .map(|m| {
                let d = cat.morphism(m);
                MorphismDoc { src: d.src, tgt: d.tgt, label: d.label.clone() }
            })
            .collect(),
        compose,
        identities: (0..cat.object_count()).map(|o| cat.identity_of(o)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("category serializes")
}

pub fn category_from_json(text: &str, max_morphisms: usize) -> Result<FinCategory, FincatError> {
    let doc: CategoryDoc = serde_json::from_str(text)
        .map_err(|e| FincatError::BadPresheaf(format!("invalid category document: {e}")))?;
    if doc.version != 1 {
        return Err(FincatError::BadPresheaf(format!("unsupported version {}", doc.version)));
    }
    let morphisms = doc
        .morphisms
        .into_iter()
        .map(|m| MorphismData { src: m.src, tgt: m.tgt, label: m.label })
        .collect::<Vec<_>>();
    let mut table = BTreeMap::new();
    for (g, row) in doc.compose.iter().enumerate() {
        for (f, entry) in row.iter().enumerate() {
            if let Some(c) = entry {
                table.insert((g, f), *c);
            }
        }
    }
    FinCategory::check(doc.objects, morphisms, doc.identities, table, max_morphisms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_arrow_category() {
        let c = FinCategory::arrow();
        let json = category_to_json(&c);
        let c2 = category_from_json(&json, 100).unwrap();
        assert_eq!(c2.object_count(), 2);
        assert_eq!(c2.morphism_count(), 3);
        assert_eq!(category_to_json(&c2), json);
    }
}
