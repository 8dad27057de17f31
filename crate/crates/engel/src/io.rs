//! The presentation document: a TOML file naming the generators, the
//! characteristic and a list of relation clauses.
//!
//! ```toml
//! generators = ["x", "y"]
//! characteristic = 0
//!
//! [[relations]]
//! kind = "degree_cap"
//! degree = 8
//!
//! [[relations]]
//! kind = "generator_degree_cap"
//! generator = "x"
//! degree = 3
//!
//! [[relations]]
//! kind = "degree_slice_except"
//! degree = 7
//! kept = ["y*x*y^3*x*y", "y^2*x*y*x*y^2"]
//!
//! [[relations]]
//! kind = "divisor_support"
//! max_degree = 6
//! support = ["y*x*y^3*x*y", "y^2*x*y*x*y^2"]
//!
//! [[relations]]
//! kind = "polynomial"
//! name = "h2"
//! value = "2*y*x*y^3*x*y - 5*y^2*x*y*x*y^2"
//! ```
//!
//! Words and polynomials use the expression grammar of
//! [`engel_core::expr`]. Polynomial clauses must be homogeneous.

use engel_core::expr::{parse_poly, parse_word};
use engel_core::{Clause, FreeAlgebra, ParseError, Presentation, PresentationError, Rationals, Word};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Syntax(#[from] toml::de::Error),
    #[error("relation {index} ({kind}): {source}")]
    Expression {
        index: usize,
        kind: &'static str,
        source: ParseError,
    },
    #[error("relation {index}: generator `{name}` is not declared")]
    UnknownGenerator { index: usize, name: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    generators: Vec<String>,
    #[serde(default)]
    characteristic: u64,
    relations: Vec<RelationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RelationDoc {
    DegreeCap { degree: usize },
    GeneratorDegreeCap { generator: String, degree: usize },
    DegreeSliceExcept { degree: usize, kept: Vec<String> },
    DivisorSupport { max_degree: usize, support: Vec<String> },
    Polynomial { name: String, value: String },
}

impl RelationDoc {
    fn kind(&self) -> &'static str {
        match self {
            RelationDoc::DegreeCap { .. } => "degree_cap",
            RelationDoc::GeneratorDegreeCap { .. } => "generator_degree_cap",
            RelationDoc::DegreeSliceExcept { .. } => "degree_slice_except",
            RelationDoc::DivisorSupport { .. } => "divisor_support",
            RelationDoc::Polynomial { .. } => "polynomial",
        }
    }
}

/// Parses and validates a presentation document.
pub fn parse_presentation(text: &str) -> Result<Presentation, DocumentError> {
    let doc: Document = toml::from_str(text)?;
    let free = FreeAlgebra::new(Rationals, &doc.generators);
    let mut clauses = Vec::with_capacity(doc.relations.len());
    for (index, rel) in doc.relations.iter().enumerate() {
        let kind = rel.kind();
        let expr_err = |source| DocumentError::Expression { index, kind, source };
        let words = |list: &[String]| -> Result<Vec<Word>, DocumentError> {
            list.iter()
                .map(|s| parse_word(s, &free).map_err(expr_err))
                .collect()
        };
        clauses.push(match rel {
            RelationDoc::DegreeCap { degree } => Clause::DegreeCap { min_degree: *degree },
            RelationDoc::GeneratorDegreeCap { generator, degree } => Clause::GeneratorDegreeCap {
                generator: free.generator_index(generator).ok_or_else(|| {
                    DocumentError::UnknownGenerator {
                        index,
                        name: generator.clone(),
                    }
                })?,
                min_degree: *degree,
            },
            RelationDoc::DegreeSliceExcept { degree, kept } => Clause::DegreeSliceExcept {
                degree: *degree,
                kept: words(kept)?,
            },
            RelationDoc::DivisorSupport { max_degree, support } => Clause::DivisorSupport {
                max_degree: *max_degree,
                support: words(support)?,
            },
            RelationDoc::Polynomial { name, value } => Clause::Polynomial {
                name: name.clone(),
                poly: parse_poly(value, &free).map_err(expr_err)?,
            },
        });
    }
    Ok(Presentation::new(doc.generators, doc.characteristic, clauses)?)
}

/// Renders a presentation in canonical form; `parse_presentation` inverts it.
pub fn render_presentation(spec: &Presentation) -> String {
    let free = spec.free_algebra();
    let names = spec.generators();
    let words = |ws: &[Word]| ws.iter().map(|w| w.render(names)).collect();
    let relations = spec
        .clauses()
        .iter()
        .map(|c| match c {
            Clause::DegreeCap { min_degree } => RelationDoc::DegreeCap { degree: *min_degree },
            Clause::GeneratorDegreeCap { generator, min_degree } => RelationDoc::GeneratorDegreeCap {
                generator: names[*generator].clone(),
                degree: *min_degree,
            },
            Clause::DegreeSliceExcept { degree, kept } => RelationDoc::DegreeSliceExcept {
                degree: *degree,
                kept: words(kept),
            },
            Clause::DivisorSupport { max_degree, support } => RelationDoc::DivisorSupport {
                max_degree: *max_degree,
                support: words(support),
            },
            Clause::Polynomial { name, poly } => RelationDoc::Polynomial {
                name: name.clone(),
                value: free.render(poly),
            },
        })
        .collect();
    let doc = Document {
        generators: names.to_vec(),
        characteristic: spec.characteristic(),
        relations,
    };
    toml::to_string(&doc).expect("document serializes")
}

/// The instance presentation shipped with the crate.
pub const INSTANCE: &str = include_str!("../fixtures/instance.toml");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixture_is_the_instance() {
        let spec = parse_presentation(INSTANCE).unwrap();
        assert_eq!(spec, Presentation::engel_counterexample());
        assert_eq!(spec.clauses().len(), 6);
        assert_eq!(spec.generators().len(), 2);
        assert_eq!(spec.characteristic(), 0);
    }

    #[test]
    fn round_trip() {
        let spec = Presentation::engel_counterexample();
        let text = render_presentation(&spec);
        assert_eq!(parse_presentation(&text).unwrap(), spec);
        let spec3 = spec.with_characteristic(3).unwrap();
        assert_eq!(parse_presentation(&render_presentation(&spec3)).unwrap(), spec3);
    }

    #[test]
    fn characteristic_three_is_flagged() {
        let text = include_str!("../fixtures/instance-char3.toml");
        let spec = parse_presentation(text).unwrap();
        assert_eq!(spec.characteristic(), 3);
        assert!(spec.outside_theorem_hypotheses());
    }

    #[test]
    fn schema_errors() {
        let missing_cap = "generators = [\"x\"]\n[[relations]]\nkind = \"generator_degree_cap\"\ngenerator = \"x\"\ndegree = 2\n";
        assert!(matches!(
            parse_presentation(missing_cap),
            Err(DocumentError::Presentation(PresentationError::Unbounded))
        ));
        let unknown_kind = "generators = [\"x\"]\n[[relations]]\nkind = \"cube\"\n";
        assert!(matches!(parse_presentation(unknown_kind), Err(DocumentError::Syntax(_))));
        let extra = "generators = [\"x\"]\n[[relations]]\nkind = \"degree_cap\"\ndegree = 2\ncolor = 1\n";
        assert!(matches!(parse_presentation(extra), Err(DocumentError::Syntax(_))));
        let bad_gen = "generators = [\"x\"]\n[[relations]]\nkind = \"degree_cap\"\ndegree = 3\n[[relations]]\nkind = \"generator_degree_cap\"\ngenerator = \"q\"\ndegree = 2\n";
        assert!(matches!(
            parse_presentation(bad_gen),
            Err(DocumentError::UnknownGenerator { index: 1, .. })
        ));
        let bad_poly = "generators = [\"x\"]\n[[relations]]\nkind = \"degree_cap\"\ndegree = 3\n[[relations]]\nkind = \"polynomial\"\nname = \"p\"\nvalue = \"x^0\"\n";
        match parse_presentation(bad_poly) {
            Err(DocumentError::Expression { index: 1, source, .. }) => assert_eq!(source.pos, 2),
            other => panic!("{other:?}"),
        }
        let composite = "generators = [\"x\"]\ncharacteristic = 4\n[[relations]]\nkind = \"degree_cap\"\ndegree = 3\n";
        assert!(matches!(
            parse_presentation(composite),
            Err(DocumentError::Presentation(PresentationError::BadCharacteristic(4)))
        ));
    }
}
