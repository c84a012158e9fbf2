#![no_main]

use libfuzzer_sys::fuzz_target;
use treeirr::{albertson_index, canonical_code, sigma_index, Tree};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let edges = rest.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
    if let Ok(tree) = Tree::new(n as usize, edges) {
        let code = canonical_code(&tree);
        assert_eq!(code.vertex_count(), tree.vertex_count());
        let rebuilt = code.to_tree();
        assert_eq!(canonical_code(&rebuilt), code);
        assert_eq!(albertson_index(&rebuilt), albertson_index(&tree));
        assert_eq!(sigma_index(&rebuilt), sigma_index(&tree));
    }
});
