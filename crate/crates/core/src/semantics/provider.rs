use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense embedding with its Euclidean norm cached.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingVector {
    values: Vec<f64>,
    norm: f64,
}

impl EmbeddingVector {
    pub fn new(values: Vec<f64>) -> Self {
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        EmbeddingVector { values, norm }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn cosine(&self, other: &EmbeddingVector) -> Result<f64> {
        if self.dimension() != other.dimension() {
            return Err(Error::Domain(format!(
                "embedding dimensions differ ({} vs {})",
                self.dimension(),
                other.dimension()
            )));
        }
        if self.norm == 0.0 || other.norm == 0.0 {
            return Err(Error::Domain("zero-norm embedding".into()));
        }
        let dot: f64 = self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum();
        Ok((dot / (self.norm * other.norm)).clamp(-1.0, 1.0))
    }
}

/// Source of sentence embeddings. Implementations must return the same
/// vector for the same text within a session.
pub trait EmbeddingProvider: Send + Sync {
    fn provider_id(&self) -> &str;

    fn dimension(&self) -> usize;

    fn embed(&self, text: &str) -> Result<EmbeddingVector>;

    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>> {
        texts.iter().map(|t| self.embed(t)).collect()
    }
}

/// Deterministic offline provider: hashed character-trigram counts.
///
/// Texts are lowercased, whitespace-collapsed and padded with one space on
/// each side; every trigram increments the bucket chosen by its FNV-1a hash.
#[derive(Clone, Debug)]
pub struct StubProvider {
    dimension: usize,
    id: String,
}

impl Default for StubProvider {
    fn default() -> Self {
        StubProvider::new(512)
    }
}

impl StubProvider {
    pub fn new(dimension: usize) -> Self {
        assert!(dimension > 0, "stub dimension must be positive");
        StubProvider {
            dimension,
            id: format!("stub-char3-{dimension}"),
        }
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

impl EmbeddingProvider for StubProvider {
    fn provider_id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn embed(&self, text: &str) -> Result<EmbeddingVector> {
        let normalized: String = text.to_lowercase().split_whitespace().collect::<Vec<_>>().join(" ");
        let mut values = vec![0.0; self.dimension];
        if normalized.is_empty() {
            return Ok(EmbeddingVector::new(values));
        }
        let chars: Vec<char> = format!(" {normalized} ").chars().collect();
        let mut buf = String::new();
        for w in chars.windows(3) {
            buf.clear();
            buf.extend(w);
            values[(fnv1a(buf.as_bytes()) % self.dimension as u64) as usize] += 1.0;
        }
        Ok(EmbeddingVector::new(values))
    }
}

/// On-disk format of [`FileProvider`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddingFile {
    pub provider_id: String,
    pub dimension: usize,
    pub vectors: HashMap<String, Vec<f64>>,
}

/// Precomputed text → vector map, loaded from JSON or built in memory.
#[derive(Clone, Debug)]
pub struct FileProvider {
    id: String,
    dimension: usize,
    vectors: HashMap<String, EmbeddingVector>,
}

impl FileProvider {
    pub fn from_file_data(data: EmbeddingFile) -> Result<Self> {
        let mut vectors = HashMap::with_capacity(data.vectors.len());
        for (text, v) in data.vectors {
            if v.len() != data.dimension {
                return Err(Error::Config(format!(
                    "vector for {text:?} has dimension {}, header says {}",
                    v.len(),
                    data.dimension
                )));
            }
            vectors.insert(text.trim().to_string(), EmbeddingVector::new(v));
        }
        Ok(FileProvider {
            id: data.provider_id,
            dimension: data.dimension,
            vectors,
        })
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        let data: EmbeddingFile = serde_json::from_str(raw).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        FileProvider::from_file_data(data)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        FileProvider::from_json(&raw)
    }

    pub fn from_map<I, S>(provider_id: &str, dimension: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: Into<String>,
    {
        FileProvider::from_file_data(EmbeddingFile {
            provider_id: provider_id.into(),
            dimension,
            vectors: entries.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        })
    }
}

impl EmbeddingProvider for FileProvider {
    fn provider_id(&self) -> &str {
        &self.id
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn embed(&self, text: &str) -> Result<EmbeddingVector> {
        self.vectors
            .get(text.trim())
            .cloned()
            .ok_or_else(|| Error::Provider(format!("{}: no vector for {text:?}", self.id)))
    }
}

/// Memoizing wrapper keyed by `(provider_id, trimmed text)`. Safe to share
/// across threads.
pub struct CachedEmbedder {
    provider: Arc<dyn EmbeddingProvider>,
    cache: RwLock<HashMap<(String, String), Arc<EmbeddingVector>>>,
}

impl CachedEmbedder {
    pub fn new(provider: Arc<dyn EmbeddingProvider>) -> Self {
        CachedEmbedder {
            provider,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn provider(&self) -> &dyn EmbeddingProvider {
        self.provider.as_ref()
    }

    fn key(&self, text: &str) -> (String, String) {
        (self.provider.provider_id().to_string(), text.trim().to_string())
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn embed(&self, text: &str) -> Result<Arc<EmbeddingVector>> {
        let key = self.key(text);
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(self.provider.embed(&key.1)?);
        self.cache
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert_with(|| Arc::clone(&v));
        Ok(v)
    }

    /// Fetches every uncached text in a single provider batch.
    pub fn prefetch(&self, texts: &[String]) -> Result<()> {
        let missing: Vec<String> = {
            let cache = self.cache.read().expect("cache lock");
            let mut seen = std::collections::HashSet::new();
            texts
                .iter()
                .map(|t| t.trim().to_string())
                .filter(|t| !cache.contains_key(&self.key(t)) && seen.insert(t.clone()))
                .collect()
        };
        if missing.is_empty() {
            return Ok(());
        }
        let vectors = self.provider.embed_batch(&missing)?;
        if vectors.len() != missing.len() {
            return Err(Error::Provider(format!(
                "provider returned {} vectors for {} texts",
                vectors.len(),
                missing.len()
            )));
        }
        let mut cache = self.cache.write().expect("cache lock");
        for (text, v) in missing.into_iter().zip(vectors) {
            cache.insert(self.key(&text), Arc::new(v));
        }
        Ok(())
    }
}
