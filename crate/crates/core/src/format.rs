//! Versioned JSON files.
//!
//! Every file is a JSON object carrying `"version": 1` next to the fields
//! of the value it holds. Errors name the file, the line, and the field.

use std::fmt;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

pub const VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub file: String,
    pub line: usize,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.file, self.line, self.field, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Serialize)]
struct Versioned<'a, T> {
    version: u64,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with the version field first.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Versioned { version: VERSION, body: value })
        .expect("file values serialize to JSON objects");
    s.push('\n');
    s
}

/// One-line JSON record with the version field, for line-delimited output.
pub fn to_record<T: Serialize>(value: &T) -> String {
    serde_json::to_string(&Versioned { version: VERSION, body: value }).expect("file values serialize to JSON objects")
}

/// Byte range of a top-level key and its value, with the comma that
/// separates it from a neighbor.
fn top_level_entry(text: &str, key: &str) -> Option<(usize, usize)> {
    let bytes = text.as_bytes();
    let mut depth = 0;
    let mut i = 0;
    let mut last_comma = None;
    while i < bytes.len() {
        match bytes[i] {
            b'"' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i] != b'"' {
                    i += if bytes[i] == b'\\' { 2 } else { 1 };
                }
                let name = &text[start + 1..i.min(text.len())];
                i += 1;
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                    j += 1;
                }
                if depth == 1 && name == key && bytes.get(j) == Some(&b':') {
                    let mut end = j + 1;
                    let mut d = 0;
                    let mut in_str = false;
                    while end < bytes.len() {
                        let c = bytes[end];
                        if in_str {
                            if c == b'\\' {
                                end += 1;
                            } else if c == b'"' {
                                in_str = false;
                            }
                        } else {
                            match c {
                                b'"' => in_str = true,
                                b'{' | b'[' => d += 1,
                                b'}' | b']' if d == 0 => break,
                                b'}' | b']' => d -= 1,
                                b',' if d == 0 => return Some((start, end + 1)),
                                _ => {}
                            }
                        }
                        end += 1;
                    }
                    return Some((last_comma.unwrap_or(start), end));
                }
                continue;
            }
            b'{' | b'[' => depth += 1,
            b'}' | b']' => depth -= 1,
            b',' if depth == 1 => last_comma = Some(i),
            _ => {}
        }
        i += 1;
    }
    None
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].bytes().filter(|&b| b == b'\n').count() + 1
}

/// Parses a versioned file. `file` names the source in diagnostics.
pub fn from_str<T: DeserializeOwned>(text: &str, file: &str) -> Result<T, ParseError> {
    let err = |line: usize, field: &str, message: String| ParseError {
        file: file.to_string(),
        line,
        field: field.to_string(),
        message,
    };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| err(e.line(), "<syntax>", e.to_string()))?;
    let Some(obj) = value.as_object() else {
        return Err(err(1, "<root>", "expected a JSON object".into()));
    };
    let Some((start, end)) = top_level_entry(text, "version") else {
        return Err(err(1, "version", "missing format version".into()));
    };
    match obj.get("version").and_then(|v| v.as_u64()) {
        Some(VERSION) => {}
        _ => {
            return Err(err(
                line_of(text, start),
                "version",
                format!("unsupported format version {} (expected {VERSION})", obj["version"]),
            ))
        }
    }
    // Blank the version entry, keeping offsets and line breaks, and read
    // the rest as the value itself.
    let mut stripped = text.as_bytes().to_vec();
    for b in &mut stripped[start..end] {
        if *b != b'\n' {
            *b = b' ';
        }
    }
    let stripped = String::from_utf8(stripped).expect("only ASCII bytes were replaced");
    let mut de = serde_json::Deserializer::from_str(&stripped);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        let field = if field == "." { "<root>".to_string() } else { field };
        err(inner.line(), &field, strip_position(&inner.to_string()))
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, ParseError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        file: name.clone(),
        line: 0,
        field: "<file>".into(),
        message: e.to_string(),
    })?;
    from_str(&text, &name)
}
