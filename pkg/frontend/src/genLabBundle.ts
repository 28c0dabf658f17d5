/**
 * Drive webpack over a vendored toy package to produce a ground-truth
 * bundle described by a FixtureManifest.
 */

import * as fs from 'node:fs';
import * as path from 'node:path';
import webpack from 'webpack';
import type { Configuration, Stats } from 'webpack';

import type { EntryPackage, FixtureManifest, MinifierSettings } from './manifest.js';
import { TOY_PACKAGES, ToyPackage } from './toyPackages.js';

const WEBPACK_VERSION: string = webpack.version;

export interface LabBundleSpec {
  id: string;
  entry: EntryPackage;
  minifier: MinifierSettings;
  codeSplit?: boolean;
}

export function toyPackage(name: string): ToyPackage {
  const pkg = TOY_PACKAGES.find((p) => p.name === name);
  if (!pkg) { throw new Error(`unknown toy package ${name}`); }
  return pkg;
}

/** Write one vendored package version as an installable artifact dir. */
export function writePackageArtifact(root: string, name: string,
                                     version: string): string {
  const pkg = toyPackage(name);
  const ver = pkg.versions.find((v) => v.version === version);
  if (!ver) { throw new Error(`unknown version ${name}@${version}`); }
  const dir = path.join(root, name);
  fs.mkdirSync(dir, { recursive: true });
  fs.writeFileSync(
    path.join(dir, 'package.json'),
    JSON.stringify({ name, version, main: 'index.js' }, null, 2) + '\n');
  for (const [file, source] of Object.entries(ver.files)) {
    const target = path.join(dir, file);
    fs.mkdirSync(path.dirname(target), { recursive: true });
    fs.writeFileSync(target, source);
  }
  return dir;
}

function runWebpack(config: Configuration): Promise<Stats> {
  return new Promise((resolve, reject) => {
    webpack(config, (err, stats) => {
      if (err) { reject(err); return; }
      if (!stats) { reject(new Error('webpack produced no stats')); return; }
      if (stats.hasErrors()) {
        reject(new Error(stats.toString({ errorDetails: true })));
        return;
      }
      resolve(stats);
    });
  });
}

export async function genLabBundle(
    spec: LabBundleSpec, fixturesRoot: string,
    buildRoot: string): Promise<FixtureManifest> {
  const workDir = path.join(buildRoot, spec.id);
  const modulesDir = path.join(workDir, 'node_modules');
  fs.rmSync(workDir, { recursive: true, force: true });
  fs.mkdirSync(modulesDir, { recursive: true });
  writePackageArtifact(modulesDir, spec.entry.name, spec.entry.version);

  const entryFile = path.join(workDir, 'entry.js');
  const codeSplit = spec.codeSplit ?? false;
  fs.writeFileSync(entryFile, codeSplit
    ? `import('${spec.entry.name}').then(function (lib) { console.log(lib); });\n`
    : `var lib = require('${spec.entry.name}');\nconsole.log(lib);\n`);

  const outDir = path.join(fixturesRoot, 'bundles', spec.id);
  fs.rmSync(outDir, { recursive: true, force: true });
  const config: Configuration = {
    mode: spec.minifier.enabled ? 'production' : 'development',
    context: workDir,
    entry: entryFile,
    // es5 runtime keeps output compatible with conservative parsers
    target: ['web', 'es5'],
    devtool: false,
    output: { path: outDir, filename: 'main.js' },
    optimization: {
      minimize: spec.minifier.enabled,
      splitChunks: codeSplit ? { chunks: 'all', minSize: 0 } : false,
      runtimeChunk: false,
      concatenateModules: false,
    },
  };
  if (spec.minifier.enabled) {
    const TerserPlugin =
      (await import('minimizer-webpack-plugin')).default;
    config.optimization!.minimizer = [new TerserPlugin({
      terserOptions: {
        mangle: spec.minifier.mangle,
        compress: spec.minifier.compress,
        format: { comments: false },
      },
      extractComments: false,
    })];
  }
  await runWebpack(config);

  const chunks = fs.readdirSync(outDir)
    .filter((f) => f.endsWith('.js') && f !== 'main.js')
    .map((f) => path.join('bundles', spec.id, f))
    .sort();
  const manifest: FixtureManifest = {
    schemaVersion: 1,
    id: spec.id,
    bundler: 'webpack',
    bundlerVersion: WEBPACK_VERSION,
    minifier: spec.minifier,
    codeSplit,
    entries: [spec.entry],
    groundTruth: { [spec.entry.name]: spec.entry.version },
    artifacts: {
      bundle: path.join('bundles', spec.id, 'main.js'),
      chunks,
    },
  };
  const manifestDir = path.join(fixturesRoot, 'manifests');
  fs.mkdirSync(manifestDir, { recursive: true });
  fs.writeFileSync(path.join(manifestDir, `${spec.id}.json`),
                   JSON.stringify(manifest, null, 2) + '\n');
  return manifest;
}

/** Vendor every toy package version for the consumer's index build. */
export function writeAllPackageArtifacts(fixturesRoot: string): string[] {
  const written: string[] = [];
  for (const pkg of TOY_PACKAGES) {
    for (const ver of pkg.versions) {
      const root = path.join(fixturesRoot, 'packages', pkg.name,
                             ver.version);
      fs.mkdirSync(root, { recursive: true });
      writePackageArtifact(root, pkg.name, ver.version);
      written.push(path.join(root, pkg.name));
    }
  }
  return written;
}
