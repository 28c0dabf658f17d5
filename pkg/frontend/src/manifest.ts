/**
 * Fixture manifest schema. One manifest JSON per generated bundle;
 * manifests are committed and generated artifacts are reproducible
 * from them with the lockfile-pinned toolchain.
 *
 * Layout written under fixtures/:
 *   manifests/<id>.json        one FixtureManifest per bundle
 *   bundles/<id>/main.js       the generated bundle (+ chunks, maps)
 *   packages/<name>/<version>/ vendored artifact dirs (all versions,
 *                              for the consumer to index)
 *   preambles/<bundler>.js     runtime preamble snippets
 *   pnpm/bundle.js.map         pnpm-layout source map fixture
 *   pnpm/manifest.json         its declared ground truth
 */

export interface EntryPackage {
  name: string;
  version: string;
}

export interface MinifierSettings {
  enabled: boolean;
  /** Identifier mangling + whitespace removal (terser mangle). */
  mangle: boolean;
  /** Structural compression passes (terser compress). */
  compress: boolean;
}

export interface FixtureManifest {
  schemaVersion: 1;
  id: string;
  bundler: string;
  bundlerVersion: string;
  minifier: MinifierSettings;
  codeSplit: boolean;
  entries: EntryPackage[];
  /** package name -> exact version the consumer must report */
  groundTruth: Record<string, string>;
  /** paths relative to the fixtures root */
  artifacts: { bundle: string; chunks: string[] };
}
