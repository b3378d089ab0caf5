//! HTTP clients for the embedding and translation services.
//!
//! Wire contract:
//!
//! ```text
//! POST /embed      {"texts": [..]}             → {"model", "dimension", "vectors": [[..], ..]}
//! GET  /health                                 → {"status": "ok", "model"}
//! POST /translate  {"texts": [..], "from": ..} → {"texts": [..]}
//! ```

use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::provider::{EmbeddingProvider, EmbeddingVector};
use super::translate::TranslationProvider;
use crate::error::{Error, Result};
use crate::lyrics::Language;

/// Texts sent per `/embed` request.
pub const EMBED_BATCH_SIZE: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbedRequest {
    pub texts: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbedResponse {
    pub model: String,
    pub dimension: usize,
    pub vectors: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HealthResponse {
    pub status: String,
    pub model: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranslateRequest {
    pub texts: Vec<String>,
    pub from: Language,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranslateResponse {
    pub texts: Vec<String>,
}

fn agent() -> ureq::Agent {
    ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(60)))
        .build()
        .into()
}

fn endpoint(base: &str, path: &str) -> String {
    format!("{}/{}", base.trim_end_matches('/'), path)
}

fn provider_err(url: &str, e: impl std::fmt::Display) -> Error {
    Error::Provider(format!("{url}: {e}"))
}

/// Client for a remote `/embed` service. The model name and dimension are
/// learned at connect time.
pub struct RemoteProvider {
    base_url: String,
    model: String,
    dimension: usize,
    agent: ureq::Agent,
}

impl RemoteProvider {
    /// Checks `/health`, then embeds a probe sentence to learn the
    /// dimension.
    pub fn connect(base_url: &str) -> Result<Self> {
        let agent = agent();
        let url = endpoint(base_url, "health");
        let health: HealthResponse = agent
            .get(&url)
            .call()
            .map_err(|e| provider_err(&url, e))?
            .body_mut()
            .read_json()
            .map_err(|e| provider_err(&url, e))?;
        if health.status != "ok" {
            return Err(provider_err(&url, format!("status is {:?}", health.status)));
        }
        let mut provider = RemoteProvider {
            base_url: base_url.to_string(),
            model: health.model,
            dimension: 0,
            agent,
        };
        let probe = provider.post_embed(&["health check".to_string()])?;
        provider.dimension = probe.dimension;
        Ok(provider)
    }

    pub fn model(&self) -> &str {
        &self.model
    }

    fn post_embed(&self, texts: &[String]) -> Result<EmbedResponse> {
        let url = endpoint(&self.base_url, "embed");
        let resp: EmbedResponse = self
            .agent
            .post(&url)
            .send_json(EmbedRequest { texts: texts.to_vec() })
            .map_err(|e| provider_err(&url, e))?
            .body_mut()
            .read_json()
            .map_err(|e| provider_err(&url, e))?;
        if resp.vectors.len() != texts.len() {
            return Err(provider_err(
                &url,
                format!("{} vectors for {} texts", resp.vectors.len(), texts.len()),
            ));
        }
        if let Some(v) = resp.vectors.iter().find(|v| v.len() != resp.dimension) {
            return Err(provider_err(
                &url,
                format!("vector of length {} but dimension {}", v.len(), resp.dimension),
            ));
        }
        if self.dimension != 0 && resp.dimension != self.dimension {
            return Err(provider_err(
                &url,
                format!("dimension changed from {} to {}", self.dimension, resp.dimension),
            ));
        }
        Ok(resp)
    }
}

impl EmbeddingProvider for RemoteProvider {
    fn provider_id(&self) -> &str {
        &self.model
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn embed(&self, text: &str) -> Result<EmbeddingVector> {
        let mut v = self.embed_batch(&[text.to_string()])?;
        Ok(v.remove(0))
    }

    fn embed_batch(&self, texts: &[String]) -> Result<Vec<EmbeddingVector>> {
        let mut out = Vec::with_capacity(texts.len());
        for chunk in texts.chunks(EMBED_BATCH_SIZE) {
            let resp = self.post_embed(chunk)?;
            out.extend(resp.vectors.into_iter().map(EmbeddingVector::new));
        }
        Ok(out)
    }
}

/// Client for a remote `/translate` service.
pub struct RemoteTranslator {
    base_url: String,
    agent: ureq::Agent,
}

impl RemoteTranslator {
    pub fn new(base_url: &str) -> Self {
        RemoteTranslator {
            base_url: base_url.to_string(),
            agent: agent(),
        }
    }
}

impl TranslationProvider for RemoteTranslator {
    fn translate_batch(&self, texts: &[String], from: Language) -> Result<Vec<String>> {
        if from == Language::En || texts.is_empty() {
            return Ok(texts.to_vec());
        }
        let url = endpoint(&self.base_url, "translate");
        let resp: TranslateResponse = self
            .agent
            .post(&url)
            .send_json(TranslateRequest {
                texts: texts.to_vec(),
                from,
            })
            .map_err(|e| provider_err(&url, e))?
            .body_mut()
            .read_json()
            .map_err(|e| provider_err(&url, e))?;
        if resp.texts.len() != texts.len() {
            return Err(provider_err(
                &url,
                format!("{} translations for {} texts", resp.texts.len(), texts.len()),
            ));
        }
        Ok(resp.texts)
    }
}
