//! Line-per-cell serialization. Each line is a JSON object tagged by
//! `cell`; cells refer to earlier cells by name (squares of prisms by index).
//!
//! ```text
//! {"cell":"vertex","name":"v0"}
//! {"cell":"edge","name":"a","source":"v0","target":"v1"}
//! {"cell":"square","boundary":["a","-e1","-b","-t"]}
//! {"cell":"cube","loops":["a","b","c"]}
//! {"cell":"prism","square":0,"fibers":["z","z","z","z"]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ComplexError, CubeComplex, EdgeRole};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Cell { line: usize, source: ComplexError },
    #[error("complex has no vertices")]
    Empty,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Role {
    Plain,
    Tree,
    Internal,
}

fn is_plain(r: &Role) -> bool {
    matches!(r, Role::Plain)
}

fn plain() -> Role {
    Role::Plain
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "cell", rename_all = "lowercase", deny_unknown_fields)]
enum Record {
    Vertex {
        name: String,
    },
    Edge {
        name: String,
        source: String,
        target: String,
        #[serde(default = "plain", skip_serializing_if = "is_plain")]
        role: Role,
    },
    Square {
        boundary: [String; 4],
    },
    Cube {
        loops: Vec<String>,
    },
    Prism {
        square: usize,
        fibers: [String; 4],
    },
}

pub fn write_complex(c: &CubeComplex) -> String {
    let mut records = Vec::new();
    for v in c.vertices() {
        records.push(Record::Vertex { name: v.clone() });
    }
    for e in c.edges() {
        records.push(Record::Edge {
            name: e.name.clone(),
            source: c.vertices()[e.source].clone(),
            target: c.vertices()[e.target].clone(),
            role: match e.role {
                EdgeRole::Plain => Role::Plain,
                EdgeRole::Tree => Role::Tree,
                EdgeRole::Internal => Role::Internal,
            },
        });
    }
    for s in c.squares() {
        records.push(Record::Square {
            boundary: s.boundary.map(|u| c.format_use(u)),
        });
    }
    for cube in c.cubes() {
        records.push(Record::Cube {
            loops: cube
                .loops
                .iter()
                .map(|&e| c.edges()[e].name.clone())
                .collect(),
        });
    }
    for p in c.prisms() {
        records.push(Record::Prism {
            square: p.square,
            fibers: p.fibers.map(|e| c.edges()[e].name.clone()),
        });
    }
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(&r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn read_complex(text: &str) -> Result<CubeComplex, IoError> {
    let mut c = CubeComplex::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(trimmed).map_err(|e| IoError::Syntax {
            line,
            message: e.to_string(),
        })?;
        let cell = |source: ComplexError| IoError::Cell { line, source };
        let vertex = |c: &CubeComplex, name: &str| {
            c.vertex_id(name)
                .ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
        };
        let edge = |c: &CubeComplex, name: &str| {
            c.edge_id(name)
                .ok_or_else(|| ComplexError::UnknownEdge(name.to_string()))
        };
        match record {
            Record::Vertex { name } => {
                c.add_vertex(name).map_err(cell)?;
            }
            Record::Edge {
                name,
                source,
                target,
                role,
            } => {
                let s = vertex(&c, &source).map_err(cell)?;
                let t = vertex(&c, &target).map_err(cell)?;
                let role = match role {
                    Role::Plain => EdgeRole::Plain,
                    Role::Tree => EdgeRole::Tree,
                    Role::Internal => EdgeRole::Internal,
                };
                c.add_edge(name, s, t, role).map_err(cell)?;
            }
            Record::Square { boundary } => {
                let mut uses = [super::EdgeUse::fwd(0); 4];
                for (k, token) in boundary.iter().enumerate() {
                    uses[k] = c.parse_use(token).map_err(cell)?;
                }
                c.add_square(uses).map_err(cell)?;
            }
            Record::Cube { loops } => {
                let ids = loops
                    .iter()
                    .map(|n| edge(&c, n))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(cell)?;
                c.add_cube(&ids).map_err(cell)?;
            }
            Record::Prism { square, fibers } => {
                let mut ids = [0; 4];
                for (k, n) in fibers.iter().enumerate() {
                    ids[k] = edge(&c, n).map_err(cell)?;
                }
                c.add_prism(square, ids).map_err(cell)?;
            }
        }
    }
    if c.vertex_count() == 0 {
        return Err(IoError::Empty);
    }
    Ok(c)
}
