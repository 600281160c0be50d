//! Process-wide per-content caches. Readers share a lock; a missing entry
//! is computed without holding it and inserted under the write lock, so
//! concurrent builders may duplicate work but never disagree.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, RwLock};

use crate::error::Result;

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Turns all block caches on or off. With caching off every request
/// rebuilds its block.
pub fn set_cache_enabled(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

pub fn cache_enabled() -> bool {
    ENABLED.load(Ordering::SeqCst)
}

pub(crate) struct BlockCache<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> BlockCache<K, V> {
    pub(crate) fn new() -> Self {
        Self { map: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get_or_try_build(&self, key: &K, build: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if !cache_enabled() {
            return build().map(Arc::new);
        }
        if let Some(v) = self.map.read().expect("cache lock poisoned").get(key) {
            return Ok(v.clone());
        }
        let built = Arc::new(build()?);
        let mut map = self.map.write().expect("cache lock poisoned");
        Ok(map.entry(key.clone()).or_insert(built).clone())
    }
}
