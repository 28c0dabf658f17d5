import * as fs from 'node:fs';
import * as os from 'node:os';
import * as path from 'node:path';
import { afterAll, describe, expect, it } from 'vitest';

import { acceptanceSpecs } from '../src/generateAll.js';
import { genLabBundle, writeAllPackageArtifacts } from '../src/genLabBundle.js';
import { genPnpmSourcemapFixture } from '../src/genPnpmSourcemap.js';
import { genRuntimePreambles } from '../src/genRuntimePreambles.js';
import { TOY_PACKAGES } from '../src/toyPackages.js';

const scratch = fs.mkdtempSync(path.join(os.tmpdir(), 'fixgen-'));
const buildRoot = path.join(scratch, 'build');
fs.mkdirSync(buildRoot, { recursive: true });
// keep webpack inputs CommonJS despite the ESM generator package
fs.writeFileSync(path.join(buildRoot, 'package.json'),
                 JSON.stringify({ type: 'commonjs' }) + '\n');

afterAll(() => {
  fs.rmSync(scratch, { recursive: true, force: true });
});

describe('toy package corpus', () => {
  it('has five packages with three versions each', () => {
    expect(TOY_PACKAGES).toHaveLength(5);
    for (const pkg of TOY_PACKAGES) {
      expect(pkg.versions).toHaveLength(3);
      for (const ver of pkg.versions) {
        expect(ver.version).toMatch(/^\d+\.\d+\.\d+$/);
        expect(ver.files['index.js']).toContain('module.exports');
      }
    }
  });

  it('successive versions change the source', () => {
    for (const pkg of TOY_PACKAGES) {
      const bodies = pkg.versions.map((v) => v.files['index.js']);
      expect(new Set(bodies).size).toBe(bodies.length);
    }
  });
});

describe('acceptance specs', () => {
  it('covers every package minified and unminified, code split off', () => {
    const specs = acceptanceSpecs();
    expect(specs).toHaveLength(10);
    for (const pkg of TOY_PACKAGES) {
      const mine = specs.filter((s) => s.entry.name === pkg.name);
      expect(mine.map((s) => s.minifier.enabled).sort()).toEqual(
        [false, true]);
      expect(mine.every((s) => s.codeSplit === false)).toBe(true);
    }
  });
});

describe('gen_lab_bundle', () => {
  it('bundles the package body into a single file', async () => {
    const fixturesRoot = path.join(scratch, 'fx-plain');
    const manifest = await genLabBundle({
      id: 'mathkit-test-plain',
      entry: { name: 'mathkit', version: '1.0.1' },
      minifier: { enabled: false, mangle: false, compress: false },
      codeSplit: false,
    }, fixturesRoot, buildRoot);
    const bundle = fs.readFileSync(
      path.join(fixturesRoot, manifest.artifacts.bundle), 'utf-8');
    expect(bundle).toContain('clamp');
    expect(bundle).toContain('__webpack_require__');
    expect(bundle).not.toContain("require('mathkit')");
    expect(manifest.artifacts.chunks).toEqual([]);
    expect(manifest.groundTruth).toEqual({ mathkit: '1.0.1' });
    const onDisk = JSON.parse(fs.readFileSync(
      path.join(fixturesRoot, 'manifests', 'mathkit-test-plain.json'),
      'utf-8'));
    expect(onDisk).toEqual(manifest);
  });

  it('minified and plain variants differ', async () => {
    const fixturesRoot = path.join(scratch, 'fx-pair');
    const variants: string[] = [];
    for (const minify of [false, true]) {
      const manifest = await genLabBundle({
        id: `cachelet-test-${minify ? 'min' : 'plain'}`,
        entry: { name: 'cachelet', version: '1.4.0' },
        minifier: { enabled: minify, mangle: minify, compress: false },
        codeSplit: false,
      }, fixturesRoot, buildRoot);
      variants.push(fs.readFileSync(
        path.join(fixturesRoot, manifest.artifacts.bundle), 'utf-8'));
    }
    expect(variants[1].length).toBeLessThan(variants[0].length);
  });

  it('code-split variant produces multiple chunk files', async () => {
    const fixturesRoot = path.join(scratch, 'fx-split');
    const manifest = await genLabBundle({
      id: 'mathkit-test-split',
      entry: { name: 'mathkit', version: '1.0.1' },
      minifier: { enabled: false, mangle: false, compress: false },
      codeSplit: true,
    }, fixturesRoot, buildRoot);
    expect(manifest.artifacts.chunks.length).toBeGreaterThanOrEqual(1);
    for (const chunk of manifest.artifacts.chunks) {
      expect(fs.existsSync(path.join(fixturesRoot, chunk))).toBe(true);
    }
  });

  it('vendors every package version as an artifact directory', () => {
    const fixturesRoot = path.join(scratch, 'fx-artifacts');
    const written = writeAllPackageArtifacts(fixturesRoot);
    expect(written).toHaveLength(15);
    for (const dir of written) {
      const meta = JSON.parse(fs.readFileSync(
        path.join(dir, 'package.json'), 'utf-8'));
      expect(fs.existsSync(path.join(dir, meta.main))).toBe(true);
    }
  });
});

describe('gen_runtime_preambles', () => {
  it('emits one non-trivial snippet per bundler', async () => {
    const fixturesRoot = path.join(scratch, 'fx-preambles');
    const written = await genRuntimePreambles(fixturesRoot, buildRoot);
    expect(written).toEqual([
      'preambles/browserify.js', 'preambles/esbuild.js',
      'preambles/parcel.js', 'preambles/rollup.js',
      'preambles/webpack-chunk.js', 'preambles/webpack.js']);
    for (const rel of written) {
      const source = fs.readFileSync(path.join(fixturesRoot, rel),
                                     'utf-8');
      // 8+ AST tokens need well more than 8 words of source
      expect(source.split(/\s+/).length).toBeGreaterThan(8);
    }
  });

  it('webpack snippet comes from a real build', async () => {
    const fixturesRoot = path.join(scratch, 'fx-preambles2');
    await genRuntimePreambles(fixturesRoot, buildRoot);
    const source = fs.readFileSync(
      path.join(fixturesRoot, 'preambles', 'webpack.js'), 'utf-8');
    expect(source).toContain('__webpack_require__');
    expect(source).toContain('__webpack_module_cache__');
  });
});

describe('gen_pnpm_sourcemap_fixture', () => {
  it('embeds versions in pnpm store paths', () => {
    const fixturesRoot = path.join(scratch, 'fx-pnpm');
    const fixture = genPnpmSourcemapFixture(fixturesRoot);
    const map = JSON.parse(fs.readFileSync(fixture.mapPath, 'utf-8'));
    expect(map.version).toBe(3);
    const joined = map.sources.join('\n');
    expect(joined).toContain('/.pnpm/mathkit@1.0.1/node_modules/mathkit/');
    expect(joined).toContain('/.pnpm/@toy+scoped@0.2.7_h4sh'
      + '/node_modules/@toy/scoped/');
    const manifest = JSON.parse(
      fs.readFileSync(fixture.manifestPath, 'utf-8'));
    expect(manifest.groundTruth).toEqual(fixture.groundTruth);
    expect(fixture.groundTruth['@toy/scoped']).toBe('0.2.7');
  });
});
