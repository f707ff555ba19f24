//! The on-disk scene format. Rationals are serialized as integer or `p/q`
//! strings, never as floats; a float anywhere in a coordinate is a parse
//! error. Parsing and serialization round-trip bit-exactly.

use serde::{Deserialize, Serialize};

use plgauss::exactgeom::{Complex, ComplexKind, PLMap, Point};
use plgauss::invariants::{Component, HexFace, HexFamily, Role, Scene};
use plgauss::{Rat, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SceneFile {
    pub format: String,
    pub ambient_dim: usize,
    pub components: Vec<ComponentBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spanning_surfaces: Vec<ComponentBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub null_homotopy_apexes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hex_family: Option<HexFamilyBlock>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub metadata: serde_json::Map<String, serde_json::Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentBlock {
    pub name: String,
    pub role: String,
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub cells: Vec<Vec<usize>>,
    #[serde(default = "default_kind")]
    pub kind: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HexFamilyBlock {
    pub faces: Vec<HexFaceBlock>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HexFaceBlock {
    pub axis: usize,
    pub level: u8,
    pub sign: i8,
    pub params: Vec<[String; 2]>,
    pub cells: Vec<Vec<usize>>,
    /// Per component, the image grid indexed `component_vertex * params.len()
    /// + param_vertex`.
    pub factors: Vec<Vec<Vec<String>>>,
}

fn default_kind() -> String {
    "closed".into()
}

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    Rat::parse_exact(s)
        .ok_or_else(|| ParseError(format!("not an exact rational (integer or p/q): {s:?}")))
}

fn parse_point(coords: &[String], dim: usize) -> Result<Point<Rat>, ParseError> {
    if coords.len() != dim {
        return Err(ParseError(format!(
            "coordinate tuple has length {}, expected {dim}",
            coords.len()
        )));
    }
    Ok(Point::new(coords.iter().map(|c| parse_rat(c)).collect::<Result<_, _>>()?))
}

fn kind_of(s: &str) -> Result<ComplexKind, ParseError> {
    Ok(match s {
        "closed" => ComplexKind::ClosedPseudomanifold,
        "with-boundary" => ComplexKind::PseudomanifoldWithBoundary,
        "general" => ComplexKind::General,
        other => return Err(ParseError(format!("unknown complex kind {other:?}"))),
    })
}

fn kind_str(k: ComplexKind) -> &'static str {
    match k {
        ComplexKind::ClosedPseudomanifold => "closed",
        ComplexKind::PseudomanifoldWithBoundary => "with-boundary",
        ComplexKind::General => "general",
    }
}

fn parse_map(block: &ComponentBlock, ambient: usize) -> Result<PLMap<Rat>, ParseError> {
    let images = block
        .vertices
        .iter()
        .map(|v| parse_point(v, ambient))
        .collect::<Result<Vec<_>, _>>()?;
    let domain = Complex::new(
        images.len(),
        block.dim,
        block.cells.clone(),
        kind_of(&block.kind)?,
    );
    Ok(PLMap::new(domain, ambient, images))
}

fn map_block(name: &str, role: &str, map: &PLMap<Rat>) -> ComponentBlock {
    ComponentBlock {
        name: name.to_string(),
        role: role.to_string(),
        dim: map.domain.dim,
        vertices: map
            .images
            .iter()
            .map(|p| p.coords.iter().map(|c| c.to_exact_string()).collect())
            .collect(),
        cells: map.domain.cells.clone(),
        kind: kind_str(map.domain.kind).to_string(),
    }
}

pub struct LoadedScene {
    pub scene: Scene<Rat>,
    pub spanning_surfaces: Vec<PLMap<Rat>>,
    pub apexes: Vec<Point<Rat>>,
    pub hex_family: Option<HexFamily<Rat>>,
}

pub fn to_scene(file: &SceneFile) -> Result<LoadedScene, ParseError> {
    let mut components = Vec::with_capacity(file.components.len());
    for block in &file.components {
        let role = Role::parse(&block.role)
            .ok_or_else(|| ParseError(format!("unknown role {:?}", block.role)))?;
        components.push(Component {
            name: block.name.clone(),
            role,
            map: parse_map(block, file.ambient_dim)?,
        });
    }
    let scene = Scene::new(file.ambient_dim, components);
    let spanning_surfaces = file
        .spanning_surfaces
        .iter()
        .map(|b| parse_map(b, file.ambient_dim))
        .collect::<Result<Vec<_>, _>>()?;
    let apexes = file
        .null_homotopy_apexes
        .iter()
        .map(|a| parse_point(a, file.ambient_dim))
        .collect::<Result<Vec<_>, _>>()?;
    let hex_family = match &file.hex_family {
        None => None,
        Some(block) => Some(parse_hex(block, &scene)?),
    };
    Ok(LoadedScene { scene, spanning_surfaces, apexes, hex_family })
}

fn parse_hex(block: &HexFamilyBlock, scene: &Scene<Rat>) -> Result<HexFamily<Rat>, ParseError> {
    use plgauss::exactgeom::product_triangulation;
    let mut faces = Vec::with_capacity(block.faces.len());
    for fb in &block.faces {
        let params = fb
            .params
            .iter()
            .map(|[u, v]| Ok((parse_rat(u)?, parse_rat(v)?)))
            .collect::<Result<Vec<_>, ParseError>>()?;
        let complex = Complex::new(
            params.len(),
            2,
            fb.cells.clone(),
            ComplexKind::PseudomanifoldWithBoundary,
        );
        let mut factors = Vec::with_capacity(fb.factors.len());
        for (m, images_block) in fb.factors.iter().enumerate() {
            let base = &scene.components[m].map;
            let domain = product_triangulation(&base.domain, &complex);
            let images = images_block
                .iter()
                .map(|v| parse_point(v, scene.ambient_dim + 2))
                .collect::<Result<Vec<_>, _>>()?;
            if images.len() != domain.vertex_count {
                return Err(ParseError(format!(
                    "face factor {m} has {} images, expected {}",
                    images.len(),
                    domain.vertex_count
                )));
            }
            factors.push(PLMap::new(domain, scene.ambient_dim + 2, images));
        }
        faces.push(HexFace {
            axis: fb.axis,
            level: fb.level,
            sign: fb.sign,
            params,
            complex,
            factors,
        });
    }
    Ok(HexFamily { scene: scene.clone(), faces })
}

pub fn from_scene(
    scene: &Scene<Rat>,
    spanning_surfaces: &[PLMap<Rat>],
    apexes: &[Point<Rat>],
    hex_family: Option<&HexFamily<Rat>>,
) -> SceneFile {
    SceneFile {
        format: "plgauss-scene v1".into(),
        ambient_dim: scene.ambient_dim,
        components: scene
            .components
            .iter()
            .map(|c| map_block(&c.name, c.role.as_str(), &c.map))
            .collect(),
        spanning_surfaces: spanning_surfaces
            .iter()
            .enumerate()
            .map(|(i, s)| map_block(&format!("surface{}", i + 1), "spanning-surface", s))
            .collect(),
        null_homotopy_apexes: apexes
            .iter()
            .map(|p| p.coords.iter().map(|c| c.to_exact_string()).collect())
            .collect(),
        hex_family: hex_family.map(|h| HexFamilyBlock {
            faces: h
                .faces
                .iter()
                .map(|f| HexFaceBlock {
                    axis: f.axis,
                    level: f.level,
                    sign: f.sign,
                    params: f
                        .params
                        .iter()
                        .map(|(u, v)| [u.to_exact_string(), v.to_exact_string()])
                        .collect(),
                    cells: f.complex.cells.clone(),
                    factors: f
                        .factors
                        .iter()
                        .map(|m| {
                            m.images
                                .iter()
                                .map(|p| {
                                    p.coords.iter().map(|c| c.to_exact_string()).collect()
                                })
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        }),
        metadata: serde_json::Map::new(),
    }
}
