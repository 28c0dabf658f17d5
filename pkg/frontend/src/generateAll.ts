/**
 * Generate the full fixture set consumed by the detector's integration
 * tests: ten real-webpack bundles (five toy packages, minification on
 * and off, code split off), one code-split demonstration bundle, the
 * vendored package artifacts, runtime preambles, and the pnpm-layout
 * source map.
 */

import * as fs from 'node:fs';
import * as path from 'node:path';
import { fileURLToPath } from 'node:url';

import { genLabBundle, LabBundleSpec,
         writeAllPackageArtifacts } from './genLabBundle.js';
import { genPnpmSourcemapFixture } from './genPnpmSourcemap.js';
import { genRuntimePreambles } from './genRuntimePreambles.js';
import { TOY_PACKAGES } from './toyPackages.js';

const HERE = path.dirname(fileURLToPath(import.meta.url));
export const FIXTURES_ROOT = path.resolve(HERE, '..', 'fixtures');
export const BUILD_ROOT = path.resolve(HERE, '..', 'build');

/** Ten acceptance fixtures: each package once plain, once minified. */
export function acceptanceSpecs(): LabBundleSpec[] {
  const specs: LabBundleSpec[] = [];
  for (const pkg of TOY_PACKAGES) {
    // middle version: both an older and a newer sibling exist
    const version = pkg.versions[1].version;
    for (const minify of [false, true]) {
      specs.push({
        id: `${pkg.name}-${version}-${minify ? 'min' : 'plain'}`,
        entry: { name: pkg.name, version },
        minifier: { enabled: minify, mangle: minify, compress: false },
        codeSplit: false,
      });
    }
  }
  return specs;
}

export async function generateAll(): Promise<void> {
  fs.rmSync(FIXTURES_ROOT, { recursive: true, force: true });
  fs.mkdirSync(FIXTURES_ROOT, { recursive: true });
  // the generator package is ESM; build inputs must stay CommonJS so
  // webpack resolves require() calls instead of leaving them in place
  fs.mkdirSync(BUILD_ROOT, { recursive: true });
  fs.writeFileSync(path.join(BUILD_ROOT, 'package.json'),
                   JSON.stringify({ type: 'commonjs' }) + '\n');

  writeAllPackageArtifacts(FIXTURES_ROOT);
  for (const spec of acceptanceSpecs()) {
    const manifest = await genLabBundle(spec, FIXTURES_ROOT, BUILD_ROOT);
    console.log(`bundle ${manifest.id}: ${manifest.artifacts.bundle}`);
  }
  const split = await genLabBundle({
    id: 'mathkit-1.0.1-split',
    entry: { name: 'mathkit', version: '1.0.1' },
    minifier: { enabled: false, mangle: false, compress: false },
    codeSplit: true,
  }, FIXTURES_ROOT, BUILD_ROOT);
  console.log(`bundle ${split.id}: ${split.artifacts.chunks.length} chunks`);

  const preambles = await genRuntimePreambles(FIXTURES_ROOT, BUILD_ROOT);
  console.log(`preambles: ${preambles.join(', ')}`);
  const pnpm = genPnpmSourcemapFixture(FIXTURES_ROOT);
  console.log(`pnpm fixture: ${Object.keys(pnpm.groundTruth).length} packages`);
}

if (process.argv[1] === fileURLToPath(import.meta.url)) {
  generateAll().catch((err) => {
    console.error(err);
    process.exitCode = 1;
  });
}
